"""Command-line front end.

Each subcommand is a thin client over the service-layer handlers in
:mod:`dirac_yukawa.service`, so the CLI and the HTTP API always compute
the same thing. Exit codes: 0 success, 2 validation error, 3 physics
domain error (the inputs were well formed but the requested quantity does
not exist there).
"""

from __future__ import annotations

import sys

import click

from . import service, tables
from .errors import PhysicsDomainError

EXIT_VALIDATION = 2
EXIT_PHYSICS = 3


def _emit(handled: dict, fmt: str, out: str | None) -> None:
    result = handled["result"]
    if fmt == "csv":
        text = tables.to_csv(result)
    else:
        text = tables.to_json(result, handled["params"], handled["command"])
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _run(handler, request, fmt: str, out: str | None) -> None:
    try:
        handled = handler(request)
    except PhysicsDomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PHYSICS)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _emit(handled, fmt, out)


format_option = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write to a file instead of stdout.")


@click.group()
@click.option("--units", type=click.Choice(["natural"]), default="natural", show_default=True, help="Unit system (hbar = c = 1, energies in fm^-1).")
def main(units: str) -> None:
    """Bound-state energies and wave functions for the screened Coulomb potential."""


@main.command()
@click.argument("table_id", type=click.Choice(list(tables.TABLE_IDS)))
@click.option("--diff", is_flag=True, help="Report |computed - reference| against the embedded golden values.")
@format_option
@out_option
def table(table_id: str, diff: bool, fmt: str, out: str | None) -> None:
    """Reproduce one of the four embedded reference tables."""
    _run(service.handle_table, service.TableRequest(table_id=table_id, diff=diff), fmt, out)


def _params_options(fn):
    fn = click.option("--M", "m_mass", type=float, default=5.0, show_default=True, help="Mass (fm^-1).")(fn)
    fn = click.option("--A", "a_coupling", type=float, default=1.0, show_default=True, help="Coupling strength.")(fn)
    fn = click.option("--alpha", type=float, default=0.1, show_default=True, help="Screening parameter (fm^-1).")(fn)
    fn = click.option("--Cs", "c_s", type=float, default=None, help="Spin symmetry constant (fm^-1).")(fn)
    fn = click.option("--Cps", "c_ps", type=float, default=None, help="Pseudospin symmetry constant (fm^-1).")(fn)
    fn = click.option("--branch", type=click.Choice(["spin", "pseudospin"]), default=None, help="Defaults to spin, or pseudospin when --Cps is given.")(fn)
    return fn


def _resolve_branch(c_s, c_ps, branch):
    if c_s is not None and c_ps is not None:
        click.echo("error: give either --Cs or --Cps, not both", err=True)
        sys.exit(EXIT_VALIDATION)
    if branch is None:
        branch = "pseudospin" if c_ps is not None else "spin"
    c_sym = c_ps if branch == "pseudospin" else c_s
    if c_sym is None:
        c_sym = 0.0
    return branch, c_sym


@main.command()
@_params_options
@click.option("--n", type=int, required=True)
@click.option("--kappa", type=int, required=True)
@format_option
@out_option
def spectrum(m_mass, a_coupling, alpha, c_s, c_ps, branch, n, kappa, fmt, out):
    """Both energy roots for one (n, kappa) state."""
    branch, c_sym = _resolve_branch(c_s, c_ps, branch)
    try:
        req = service.SpectrumRequest(
            params=service.ParamsModel(M=m_mass, A=a_coupling, alpha=alpha, C_sym=c_sym),
            state=service.StateModel(n=n, kappa=kappa),
            branch=branch,
        )
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _run(service.handle_spectrum, req, fmt, out)


@main.command()
@_params_options
@click.option("--param", type=click.Choice(["A", "alpha", "C_sym"]), required=True, help="Parameter to sweep.")
@click.option("--from", "lo", type=float, required=True)
@click.option("--to", "hi", type=float, required=True)
@click.option("--step", type=float, required=True)
@click.option("--state", "state_specs", multiple=True, required=True, help="State as n,kappa; repeatable.")
@format_option
@out_option
def sweep(m_mass, a_coupling, alpha, c_s, c_ps, branch, param, lo, hi, step, state_specs, fmt, out):
    """Energy roots over a parameter grid for one or more states."""
    branch, c_sym = _resolve_branch(c_s, c_ps, branch)
    states = []
    for spec in state_specs:
        try:
            n_str, k_str = spec.split(",")
            states.append(service.StateModel(n=int(n_str), kappa=int(k_str)))
        except ValueError:
            click.echo(f"error: bad --state {spec!r}; expected n,kappa", err=True)
            sys.exit(EXIT_VALIDATION)
    try:
        req = service.SweepRequest(
            param=param,
            lo=lo,
            hi=hi,
            step=step,
            params=service.ParamsModel(M=m_mass, A=a_coupling, alpha=alpha, C_sym=c_sym),
            states=states,
            branch=branch,
        )
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _run(service.handle_sweep, req, fmt, out)


@main.command()
@_params_options
@click.option("--n", type=int, required=True)
@click.option("--kappa", type=int, required=True)
@click.option("--which", type=click.Choice(["plus", "minus"]), default="plus", show_default=True)
@click.option("--points", type=int, default=512, show_default=True)
@click.option("--r-max", type=float, default=None)
@format_option
@out_option
def wavefunction(m_mass, a_coupling, alpha, c_s, c_ps, branch, n, kappa, which, points, r_max, fmt, out):
    """Evaluate both spinor components on a radial grid."""
    branch, c_sym = _resolve_branch(c_s, c_ps, branch)
    try:
        req = service.WavefunctionRequest(
            params=service.ParamsModel(M=m_mass, A=a_coupling, alpha=alpha, C_sym=c_sym),
            state=service.StateModel(n=n, kappa=kappa),
            branch=branch,
            which=which,
            points=points,
            r_max=r_max,
        )
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _run(service.handle_wavefunction, req, fmt, out)


@main.command(name="oracle")
@click.option("--potential", type=click.Choice(["yukawa", "approx", "coulomb"]), required=True)
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option("--A", "a_coupling", type=float, required=True)
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--n", type=int, required=True)
@click.option("--l", type=int, required=True)
@click.option("--h", type=float, default=1e-3, show_default=True, help="Grid step.")
@format_option
@out_option
def oracle_cmd(potential, mass, a_coupling, alpha, n, l, h, fmt, out):
    """Numerical (shooting) eigenvalue for the nonrelativistic problem."""
    try:
        req = service.OracleRequest(potential=potential, mass=mass, A=a_coupling, alpha=alpha, n=n, l=l, h=h)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _run(service.handle_oracle, req, fmt, out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP API."""
    import uvicorn

    uvicorn.run(service.app, host=host, port=port)


if __name__ == "__main__":
    main()
