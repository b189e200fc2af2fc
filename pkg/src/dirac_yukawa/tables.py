"""Reference-table reproduction, parameter sweeps, and wave-function grids,
plus CSV/JSON serialization shared by the CLI and the service layer.

Cells the reference prints as a dash carry a classification token instead
of a number (UNDEFINED, COMPLEX, SCATTERING, SPURIOUS). Output is fully
deterministic: no timestamps, floats rendered shortest-round-trip.
"""

from __future__ import annotations

import csv
import io
import json
import math
from functools import lru_cache
from importlib import resources
from typing import Optional

import numpy as np

from . import limits, oracle, pseudospin_spectrum, spin_spectrum
from .states import Classification, EnergyPair, PhysicalParams, StateIndex

FORMAT_VERSION = 1

TABLE_IDS = ("table2", "table3", "table4", "table5")


@lru_cache(maxsize=1)
def load_reference() -> dict:
    """Embedded golden copy of the four reference tables."""
    with resources.files("dirac_yukawa.data").joinpath("reference_tables.json").open() as fh:
        return json.load(fh)


def _cell(energy: Optional[float], cls: Classification):
    """A numeric cell when the root exists, a classification token otherwise."""
    return energy if energy is not None else cls.value


def _pair_for(branch: str, p: PhysicalParams, s: StateIndex) -> EnergyPair:
    if branch == "spin":
        return spin_spectrum.spin_energy_pair(p, s)
    return pseudospin_spectrum.pseudospin_energy_pair(p, s)


def _abs_diff(ours, ref) -> Optional[float]:
    if isinstance(ours, float) and ref is not None:
        return abs(ours - ref)
    return None


def build_table2(diff: bool = False) -> dict:
    ref = load_reference()["table2"]
    par = ref["params"]
    p = PhysicalParams(M=par["M"], A=par["A"], alpha=par["alpha"])
    rows = []
    for block, kappas, ref_rows in (
        ("plus", ref["plus_kappas"], ref["plus_rows"]),
        ("minus", ref["minus_kappas"], ref["minus_rows"]),
    ):
        for ref_row in ref_rows:
            c_s = ref_row[0]
            pc = PhysicalParams(M=par["M"], A=par["A"], alpha=par["alpha"], C_sym=c_s)
            if diff:
                for kappa, ref_val in zip(kappas, ref_row[1:]):
                    pair = _pair_for("spin", pc, StateIndex(par["n"], kappa))
                    e = pair.root(block)
                    cls = pair.class_plus if block == "plus" else pair.class_minus
                    rows.append(
                        {
                            "block": block,
                            "C_s": c_s,
                            "kappa": kappa,
                            "ours": _cell(e, cls),
                            "reference": ref_val,
                            "abs_diff": _abs_diff(_cell(e, cls), ref_val),
                        }
                    )
            else:
                row = {"block": block, "C_s": c_s}
                for kappa in kappas:
                    pair = _pair_for("spin", pc, StateIndex(par["n"], kappa))
                    e = pair.root(block)
                    cls = pair.class_plus if block == "plus" else pair.class_minus
                    row[f"E_{block}_kappa{kappa}"] = _cell(e, cls)
                rows.append(row)
    columns = ["block", "C_s", "kappa", "ours", "reference", "abs_diff"] if diff else None
    return {"rows": rows, "columns": columns}


def build_table3(diff: bool = False, with_numerov: bool = True) -> dict:
    ref = load_reference()["table3"]
    m, A = ref["params"]["m"], ref["params"]["A"]
    rows = []
    for state, n, l, g, ref_analytic, ref_numerical in ref["rows"]:
        alpha = g * A
        e = limits.nonrel_energy(limits.NonRelParams(m=m, A=A, alpha=alpha, n=n, l=l))
        row = {"state": state, "n": n, "l": l, "g": g, "analytic": e.energy}
        if with_numerov:
            prob = oracle.RadialProblem(mass=m, l=l, kind=oracle.PotentialKind.YUKAWA, A=A, alpha=alpha)
            res = oracle.shoot_eigenvalue(prob, n)
            row["numerov"] = res.energy if res.converged else "UNCONVERGED"
        if diff:
            row["reference_analytic"] = ref_analytic
            row["reference_numerical"] = ref_numerical
            row["abs_diff_analytic"] = abs(e.energy - ref_analytic)
            if with_numerov and isinstance(row["numerov"], float):
                row["abs_diff_numerov"] = abs(row["numerov"] - ref_numerical)
        rows.append(row)
    return {"rows": rows, "columns": None}


def _build_dirac_table(table_id: str, branch: str, diff: bool) -> dict:
    ref = load_reference()[table_id]
    par = ref["params"]
    c = par["C_s"] if branch == "spin" else par["C_ps"]
    p = PhysicalParams(M=par["M"], A=par["A"], alpha=par["alpha"], C_sym=c)
    rows = []
    for ref_row in ref["rows"]:
        s = StateIndex(ref_row["n"], ref_row["kappa"])
        pair = _pair_for(branch, p, s)
        row = {
            "n": s.n,
            "kappa": s.kappa,
            "label": s.label,
            "e_minus": _cell(pair.e_minus, pair.class_minus),
            "e_plus": _cell(pair.e_plus, pair.class_plus),
            "class_minus": pair.class_minus.value,
            "class_plus": pair.class_plus.value,
        }
        if diff:
            row["reference_minus"] = ref_row["e_minus"]
            row["reference_plus"] = ref_row["e_plus"]
            row["abs_diff_minus"] = _abs_diff(row["e_minus"], ref_row["e_minus"])
            row["abs_diff_plus"] = _abs_diff(row["e_plus"], ref_row["e_plus"])
        rows.append(row)
    return {"rows": rows, "columns": None}


def build_table(table_id: str, diff: bool = False) -> dict:
    """Reproduce one reference table; unknown ids raise ValueError."""
    if table_id == "table2":
        return build_table2(diff)
    if table_id == "table3":
        return build_table3(diff)
    if table_id == "table4":
        return _build_dirac_table("table4", "spin", diff)
    if table_id == "table5":
        return _build_dirac_table("table5", "pseudospin", diff)
    raise ValueError(f"unknown table id {table_id!r}; expected one of {TABLE_IDS}")


def run_spectrum(p: PhysicalParams, s: StateIndex, branch: str) -> dict:
    """Both roots with classifications and back-substitution residuals."""
    pair = _pair_for(branch, p, s)
    res_mod = spin_spectrum if branch == "spin" else pseudospin_spectrum
    row = {
        "n": s.n,
        "kappa": s.kappa,
        "label": s.label,
        "branch": branch,
        "e_plus": _cell(pair.e_plus, pair.class_plus),
        "e_minus": _cell(pair.e_minus, pair.class_minus),
        "class_plus": pair.class_plus.value,
        "class_minus": pair.class_minus.value,
        "degenerate": pair.degenerate,
    }
    for which, e in (("plus", pair.e_plus), ("minus", pair.e_minus)):
        if e is not None and s.n + s.kappa + (1 if branch == "spin" else 0) != 0:
            residual, sign = res_mod.energy_residual(p, s, e)
            row[f"residual_{which}"] = residual if math.isfinite(residual) else "INF"
            row[f"radical_sign_{which}"] = sign
    return row


SWEEPABLE = ("A", "alpha", "C_sym")


def run_sweep(
    param: str,
    lo: float,
    hi: float,
    step: float,
    base: PhysicalParams,
    states: list[StateIndex],
    branch: str,
) -> dict:
    """One row per grid point per state; unphysical points carry tokens."""
    if param not in SWEEPABLE:
        raise ValueError(f"sweepable parameters are {SWEEPABLE}, got {param!r}")
    if not (lo < hi) or step <= 0.0:
        raise ValueError("sweep needs lo < hi and step > 0")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    rows = []
    for i in range(count):
        value = lo + i * step
        kwargs = {"M": base.M, "A": base.A, "alpha": base.alpha, "C_sym": base.C_sym}
        kwargs[param] = value
        p = PhysicalParams(**kwargs)
        for s in states:
            pair = _pair_for(branch, p, s)
            rows.append(
                {
                    param: value,
                    "n": s.n,
                    "kappa": s.kappa,
                    "e_plus": _cell(pair.e_plus, pair.class_plus),
                    "e_minus": _cell(pair.e_minus, pair.class_minus),
                    "class_plus": pair.class_plus.value,
                    "class_minus": pair.class_minus.value,
                }
            )
    return {"rows": rows, "columns": None}


def run_wavefunction(
    p: PhysicalParams,
    s: StateIndex,
    branch: str,
    which: str = "plus",
    points: int = 512,
    r_max: Optional[float] = None,
) -> dict:
    """Grid evaluation of the two spinor components for one bound root.

    Returns r, F, G columns plus the normalization diagnostics: the square
    integral of the closed-form component and of the full spinor density.
    """
    pair = _pair_for(branch, p, s)
    e = pair.root(which)
    cls = pair.class_plus if which == "plus" else pair.class_minus
    if e is None or cls is not Classification.BOUND:
        from .errors import InvalidStateError

        raise InvalidStateError(f"state (n={s.n}, kappa={s.kappa}) root {which} is {cls.value}, not BOUND")
    if branch == "spin":
        aux = spin_spectrum.aux_coefficients(p, s, e)
        grid_max = 25.0 / (2.0 * p.alpha * aux.nu)
        r = np.geomspace(1e-4, r_max or grid_max, points)
        F = spin_spectrum.upper_component(p, s, e, r)
        G = spin_spectrum.lower_component(p, s, e, r)
        f_main = lambda x: spin_spectrum.upper_component(p, s, e, x)
        g_other = lambda x: spin_spectrum.lower_component(p, s, e, x)
    else:
        aux = pseudospin_spectrum.pseudo_aux_coefficients(p, s, e)
        grid_max = 25.0 / (2.0 * p.alpha * aux.nu)
        r = np.geomspace(1e-4, r_max or grid_max, points)
        G = pseudospin_spectrum.lower_component_ps(p, s, e, r)
        F = pseudospin_spectrum.upper_component_ps(p, s, e, r)
        f_main = lambda x: pseudospin_spectrum.lower_component_ps(p, s, e, x)
        g_other = lambda x: pseudospin_spectrum.upper_component_ps(p, s, e, x)
    norm_main = oracle.quadrature_norm(f_main, grid_max)
    norm_other = oracle.quadrature_norm(g_other, grid_max)
    rows = [{"r": float(ri), "F": float(fi), "G": float(gi)} for ri, fi, gi in zip(r, F, G)]
    meta = {
        "energy": e,
        "norm_main_component": norm_main,
        "norm_total": norm_main + norm_other,
        "main_component": "F" if branch == "spin" else "G",
    }
    return {"rows": rows, "columns": ["r", "F", "G"], "diagnostics": meta}


def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def to_csv(result: dict) -> str:
    """Header + comma-separated rows; floats shortest-round-trip."""
    rows = result["rows"]
    columns = result.get("columns")
    if not columns:
        columns = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_cell(row.get(c)) for c in columns])
    return buf.getvalue()


_TOKENS = {c.value for c in Classification} | {"UNCONVERGED", "INF"}


def _json_row(row: dict) -> dict:
    """Energy cells holding a token become null plus a *_class field."""
    out = {}
    for key, value in row.items():
        if isinstance(value, str) and value in _TOKENS and "class" not in key:
            out[key] = None
            out[key + "_class"] = value
        else:
            out[key] = value
    return out


def to_json(result: dict, params: dict, command: str) -> str:
    payload = {
        "meta": {"params": params, "command": command, "version": FORMAT_VERSION, "units": "natural"},
        "rows": [_json_row(r) for r in result["rows"]],
    }
    if result.get("diagnostics"):
        payload["meta"]["diagnostics"] = result["diagnostics"]
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"
