"""Thin HTTP client: in-process by default, remote when given a base URL.

With no server URL the client mounts the application on an in-memory ASGI
transport, so the CLI works standalone while still exercising the exact
service code path.  With a URL it issues ordinary HTTP requests.
"""

import asyncio

import httpx

_TIMEOUT = httpx.Timeout(600.0)


class ServiceClient:
    def __init__(self, server=None):
        self._server = server

    def request(self, method, path, json_body=None):
        """Issue one request and return the httpx.Response."""
        if self._server is None:
            return asyncio.run(self._in_process(method, path, json_body))
        with httpx.Client(base_url=self._server, timeout=_TIMEOUT) as client:
            return client.request(method, path, json=json_body)

    async def _in_process(self, method, path, json_body):
        from .app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=_TIMEOUT
        ) as client:
            return await client.request(method, path, json=json_body)
