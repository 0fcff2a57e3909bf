"""Command-line interface emitting plot-ready CSV.

Subcommands map one-to-one onto service endpoints; by default the service
runs in-process, and ``--server URL`` targets a running instance instead.
Exit codes: 0 on success, 2 on usage errors (unparseable or non-finite
flags, malformed ranges, unknown figure numbers), 3 on domain errors
(invalid physical inputs or failed searches, reported on standard error).
"""

import math
import sys

import click
import httpx

from .csvio import render_csv
from .service.client import ServiceClient


class FiniteFloatParam(click.ParamType):
    name = "float"

    def convert(self, value, param, ctx):
        try:
            x = float(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not a valid number", param, ctx)
        if not math.isfinite(x):
            self.fail(f"{value!r} is not finite", param, ctx)
        return x


class RangeParam(click.ParamType):
    """start:stop:count with finite endpoints and a positive integer count."""

    name = "range"

    def convert(self, value, param, ctx):
        parts = str(value).split(":")
        if len(parts) != 3:
            self.fail(f"{value!r} is not of the form start:stop:count", param, ctx)
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            self.fail(f"{value!r} is not of the form start:stop:count", param, ctx)
        if not (math.isfinite(start) and math.isfinite(stop)):
            self.fail(f"{value!r} has a non-finite endpoint", param, ctx)
        if count < 1:
            self.fail(f"{value!r} has a count below 1", param, ctx)
        return (start, stop, count)


FINITE = FiniteFloatParam()
RANGE = RangeParam()

_CRITICAL_HEADER = [
    "parameter",
    "crossing",
    "bracket_low",
    "bracket_high",
    "estimate",
    "residual_negativity",
]


def _call(client, method, path, payload=None):
    try:
        resp = client.request(method, path, payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: service unreachable: {exc}", err=True)
        sys.exit(3)
    if resp.status_code == 400:
        body = resp.json()
        click.echo(f"error: {body['error']}: {body['message']}", err=True)
        sys.exit(3)
    if resp.status_code != 200:
        click.echo(
            f"error: service returned status {resp.status_code}: {resp.text}", err=True
        )
        sys.exit(3)
    return resp.json()


def _emit(text, out):
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out!r}: {exc}", err=True)
        sys.exit(2)


def _critical_rows(points):
    return [
        [
            p["parameter"],
            p["crossing"],
            p["bracket_low"],
            p["bracket_high"],
            p["estimate"],
            p["residual_negativity"],
        ]
        for p in points
    ]


def _axis_payload(rng):
    return {"start": rng[0], "stop": rng[1], "count": rng[2]}


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx, server):
    """Thermal entanglement of a pair of spin-1 particles."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--K", "k", type=FINITE, required=True, help="Biquadratic coupling.")
@click.option("--B", "b", type=FINITE, required=True, help="Magnetic field.")
@click.option("--J", "j", type=FINITE, default=0.0, help="Bilinear coupling.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def spectrum(client, k, b, j, out):
    """Nine energy levels, closed-form and numeric side by side."""
    data = _call(client, "POST", "/spectrum", {"K": k, "B": b, "J": j})
    header = ["label", "analytic_energy", "numeric_energy", "abs_diff"]
    rows = [
        [r["label"], r["analytic_energy"], r["numeric_energy"], r["abs_diff"]]
        for r in data["rows"]
    ]
    _emit(render_csv(header, rows), out)


@main.command()
@click.option("--K", "k", type=FINITE, required=True, help="Biquadratic coupling.")
@click.option("--B", "b", type=FINITE, required=True, help="Magnetic field.")
@click.option("--T", "t", type=FINITE, required=True, help="Temperature.")
@click.option("--J", "j", type=FINITE, default=0.0, help="Bilinear coupling.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def negativity(client, k, b, t, j, out):
    """Negativity of the thermal state at one parameter point."""
    data = _call(client, "POST", "/negativity", {"K": k, "B": b, "T": t, "J": j})
    rows = [[data["K"], data["B"], data["T"], data["negativity"]]]
    _emit(render_csv(["K", "B", "T", "negativity"], rows), out)


@main.command()
@click.option("--K-range", "k_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--B-range", "b_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--T-range", "t_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--K", "k", type=FINITE, default=None, help="Single-K shorthand.")
@click.option("--B", "b", type=FINITE, default=None, help="Single-B shorthand.")
@click.option("--T", "t", type=FINITE, default=None, help="Single-T shorthand.")
@click.option("--J", "j", type=FINITE, default=0.0, help="Bilinear coupling.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def sweep(client, k_range, b_range, t_range, k, b, t, j, out):
    """Negativity over a rectangular (K, B, T) grid, K-major CSV."""
    axes = {}
    for name, rng, single in (
        ("K_axis", k_range, k),
        ("B_axis", b_range, b),
        ("T_axis", t_range, t),
    ):
        flag = "--" + name[0] + "-range"
        if rng is not None:
            axes[name] = _axis_payload(rng)
        elif single is not None:
            axes[name] = _axis_payload((single, single, 1))
        else:
            raise click.UsageError(f"sweep requires {flag} or --{name[0]}")
    axes["J"] = j
    data = _call(client, "POST", "/sweep", axes)
    _emit(render_csv(data["header"], data["rows"]), out)


@main.command()
@click.argument("n", type=click.Choice(["1", "2", "3"]))
@click.option("--K-range", "k_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--B-range", "b_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--T-range", "t_range", type=RANGE, default=None, metavar="START:STOP:COUNT")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def figure(client, n, k_range, b_range, t_range, out):
    """Data table behind reference figure N (1, 2, or 3)."""
    n = int(n)
    allowed = {1: ("K",), 2: ("K", "B"), 3: ("T",)}[n]
    given = {"K": k_range, "B": b_range, "T": t_range}
    for axis, rng in given.items():
        if rng is not None and axis not in allowed:
            raise click.UsageError(
                f"figure {n} does not accept --{axis}-range "
                f"(allowed: {', '.join('--' + a + '-range' for a in allowed)})"
            )
    payload = {}
    for axis, key in (("K", "k_axis"), ("B", "b_axis"), ("T", "t_axis")):
        if given[axis] is not None:
            payload[key] = _axis_payload(given[axis])
    data = _call(client, "POST", f"/figures/{n}", payload)
    _emit(render_csv(data["header"], data["rows"]), out)


@main.command("critical-field")
@click.option("--K", "k", type=FINITE, required=True, help="Biquadratic coupling.")
@click.option("--T", "t", type=FINITE, required=True, help="Temperature.")
@click.option("--threshold", type=FINITE, default=1e-9, help="Entanglement threshold.")
@click.option("--tol", type=FINITE, default=1e-6, help="Bracket width tolerance.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def critical_field(client, k, t, threshold, tol, out):
    """Field at which the negativity falls through the threshold."""
    data = _call(client, "POST", "/critical/field",
                 {"K": k, "T": t, "threshold": threshold, "tol": tol})
    _emit(render_csv(_CRITICAL_HEADER, _critical_rows([data])), out)


@main.command("critical-temp")
@click.option("--K", "k", type=FINITE, required=True, help="Biquadratic coupling.")
@click.option("--B", "b", type=FINITE, required=True, help="Magnetic field.")
@click.option("--threshold", type=FINITE, default=1e-9, help="Entanglement threshold.")
@click.option("--tol", type=FINITE, default=1e-6, help="Bracket width tolerance.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def critical_temp(client, k, b, threshold, tol, out):
    """Temperature crossings of the threshold, upper crossing first."""
    data = _call(client, "POST", "/critical/temperature",
                 {"K": k, "B": b, "threshold": threshold, "tol": tol})
    _emit(render_csv(_CRITICAL_HEADER, _critical_rows(data["points"])), out)


@main.command("critical-coupling")
@click.option("--T", "t", type=FINITE, required=True, help="Temperature.")
@click.option("--B", "b", type=FINITE, default=0.0, help="Magnetic field.")
@click.option("--threshold", type=FINITE, default=1e-9, help="Entanglement threshold.")
@click.option("--tol", type=FINITE, default=1e-6, help="Bracket width tolerance.")
@click.option("--out", default=None, metavar="FILE", help="Output file (default stdout).")
@click.pass_obj
def critical_coupling(client, t, b, threshold, tol, out):
    """Coupling at which entanglement first appears."""
    data = _call(client, "POST", "/critical/coupling",
                 {"T": t, "B": b, "threshold": threshold, "tol": tol})
    _emit(render_csv(_CRITICAL_HEADER, _critical_rows([data])), out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
