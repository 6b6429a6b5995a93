"""Report envelopes shared by the command-line interface.

Each report is a JSON-serializable dict with the command, normalized inputs,
the lambda seed, the results and a provenance tag for every numeric result
field. Serialization sorts keys so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .fixedlocus import LambdaPolicy, fixed_locus
from .geometry import HypersurfaceClass, hodge_diamond, singular_fibers
from .groups import GroupElement, Subgroup
from .lattices import (
    IntegralLattice,
    coinvariant_lattice,
    lines_on_fermat,
    line_intersection_matrix,
    named_action,
    ns_fermat,
    ns_xlambda,
    twice_lattice_test,
)
from .orbifold import chen_ruan
from .wps import WeightSystem, terminality_verdict, wellformed_check

SCHEMA_VERSION = 1


def to_jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, GroupElement):
        return str(x)
    return x


def envelope(command: str, inputs: Dict, results: Dict, provenance: Dict[str, str],
             seed: Optional[int] = None) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "seed": seed,
        "results": results,
        "provenance": provenance,
    }


def dumps(report: Dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2) + "\n"


def _numeric_paths(x: Any, prefix: str = "") -> List[str]:
    if isinstance(x, dict):
        out = []
        for k, v in x.items():
            out += _numeric_paths(v, f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return [prefix]
    if isinstance(x, (list, tuple)) and any(isinstance(v, (int, Fraction, list, tuple, dict)) for v in x):
        return [prefix]
    return []


def tag_all(results: Dict, method: str, overrides: Dict[str, str] = None) -> Dict[str, str]:
    """A provenance tag for every numeric field: 'computed: <method>'."""
    tags = {p: f"computed: {method}" for p in _numeric_paths(results)}
    for k, v in (overrides or {}).items():
        tags[k] = f"computed: {v}"
    return tags


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def hodge_report(m: int, d: int, inputs: Dict) -> Dict:
    cls = HypersurfaceClass(m, d)
    diamond = hodge_diamond(cls)
    results = {
        "dimension": m,
        "degree": d,
        "euler": diamond.euler,
        "hodge": diamond.as_dict(),
        "middle_row": diamond.middle_row(),
        "rows": diamond.rows(),
    }
    prov = tag_all(results, "Jacobian ring monomial count", {"euler": "Chern class expansion"})
    return envelope("hodge", inputs, results, prov)


def fibers_report(n: int, inputs: Dict) -> Dict:
    rep = singular_fibers(n, enumerate_nodes=n <= 4)
    results = {
        "n": n,
        "singular_fibers": len(rep.fiber_exponents),
        "fiber_exponents": list(rep.fiber_exponents),
        "nodes_per_fiber": rep.nodes_per_fiber,
        "rule": rep.rule,
    }
    if rep.nodes is not None:
        results["nodes"] = {str(r): [list(v) for v in vs] for r, vs in rep.nodes.items()}
    return envelope("fibers", inputs, results, tag_all(results, "node index enumeration"))


def fixed_report(element: GroupElement, policy: LambdaPolicy, inputs: Dict) -> Dict:
    rep = fixed_locus(element, policy=policy)
    comps = [
        {"kind": c.kind, "count": c.count, "genus": c.genus, "euler": c.euler, "witness": c.witness,
         "eigenvalue": rep.decomposition.spaces[c.host].eigenvalue}
        for c in rep.components
    ]
    results = {"element": str(element), "order": element.order(), "euler": rep.euler,
               "free": rep.is_free, "components": comps}
    return envelope("fixed", inputs, results, tag_all(results, "eigenspace restriction"), seed=policy.seed)


def quotient_report(G: Subgroup, policy: LambdaPolicy, inputs: Dict) -> Dict:
    orb = chen_ruan(G, policy)
    sectors = [
        {"representative": str(s.representative), "class_size": s.class_size,
         "centralizer_order": s.centralizer_order, "component": s.component, "age": s.age,
         "contribution": dict(sorted(s.contribution.items()))}
        for s in orb.sectors
    ]
    results = {
        "group_order": orb.group_order,
        "h11": orb.h11,
        "h21": orb.h21,
        "euler": orb.euler(),
        "invariant": {"p11": orb.invariant.p11, "p12": orb.invariant.p12,
                      "euler_sum": orb.invariant.euler_sum},
        "grid": [list(r) for r in orb.grid],
        "sectors": sectors,
    }
    prov = tag_all(results, "orbifold cohomology sum over twisted sectors",
                   {"invariant.p12": "Lefschetz fixed point formula",
                    "invariant.euler_sum": "Lefschetz fixed point formula"})
    return envelope("quotient", inputs, results, prov, seed=policy.seed)


def wps_report(n: int, inputs: Dict) -> Dict:
    wf = wellformed_check(WeightSystem.symmetric_quotient(n))
    verdict = terminality_verdict(n)
    results = {
        "n": n,
        "weights": list(wf.weights),
        "degrees": list(wf.degrees),
        "primes": [{"p": r.p, "m": r.m, "k": r.k, "q": r.q} for r in wf.primes],
        "well_formed": wf.well_formed,
        "crepant": verdict.has_crepant_resolution,
        "witness": verdict.witness,
    }
    return envelope("wps", inputs, results, tag_all(results, "weight combinatorics"))


def lattice_results(lat: IntegralLattice) -> Dict:
    out = lat.to_json()
    out["discriminant_form"] = [[v for v in row] for row in lat.discriminant_form()]
    return out


LATTICE_SUBCOMMANDS = ("lines", "ns-fermat", "omega-H3", "omega-A4", "omega-S4", "ns-xlambda", "kummer-test")


def lattice_report(sub: str, inputs: Dict) -> Dict:
    if sub == "lines":
        lines = lines_on_fermat()
        gram = line_intersection_matrix()
        results = {
            "count": len(lines),
            "families": [sum(1 for l in lines if l.family == f) for f in range(3)],
            "lines": [{"index": l.index, "family": l.family, "a": l.a, "b": l.b} for l in lines],
            "intersection_matrix": [list(r) for r in gram],
        }
        method = "exact incidence over Q(xi_8)"
    elif sub == "ns-fermat":
        results = lattice_results(ns_fermat())
        method = "Gram matrix of a 20-line basis"
    elif sub.startswith("omega-"):
        lat = coinvariant_lattice(named_action(sub.split("-", 1)[1]))
        results = lattice_results(lat)
        method = "orthogonal complement of the invariant lattice in NS(F)"
    elif sub == "ns-xlambda":
        x = ns_xlambda()
        results = lattice_results(x.ns)
        results["index_over_h_plus_omega"] = x.index
        results["determinant_ratio"] = x.h_plus_omega.determinant // x.ns.determinant
        results["v"] = list(x.v)
        results["transcendental"] = lattice_results(x.transcendental)
        method = "saturation of Z h + Omega_H3 in NS(F)"
    elif sub == "kummer-test":
        x = ns_xlambda()
        rep = twice_lattice_test(x.transcendental)
        results = {
            "transcendental": lattice_results(x.transcendental),
            "twice": rep.twice,
            "even": rep.even,
            "halvable": rep.halvable,
            "L": lattice_results(rep.L) if rep.L is not None else None,
        }
        method = "halving test on discriminant generators"
    else:
        raise KeyError(f"unknown lattice subcommand {sub!r}")
    return envelope("lattice", inputs, results, tag_all(results, method))


# ---------------------------------------------------------------------------
# Markdown
# ---------------------------------------------------------------------------

def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    out += ["| " + " | ".join(str(to_jsonable(c)) for c in r) + " |" for r in rows]
    return "\n".join(out)


def to_markdown(report: Dict) -> str:
    cmd, res = report["command"], report["results"]
    if cmd == "hodge":
        cell = max(len(str(v)) for row in res["rows"] for v in row) + 2
        width = cell * max(len(r) for r in res["rows"])
        lines = [f"# Hodge diamond (dimension {res['dimension']}, degree {res['degree']})", ""]
        lines += ["".join(str(v).center(cell) for v in row).center(width).rstrip() for row in res["rows"]]
        lines += ["", f"Euler characteristic: {res['euler']}"]
        body = "\n".join(lines)
    elif cmd == "quotient":
        body = "\n".join([
            f"# Orbifold Hodge numbers (|G| = {res['group_order']})", "",
            _table(["h11", "h21", "euler"], [[res["h11"], res["h21"], res["euler"]]]), "",
            _table(["representative", "class", "centralizer", "component", "age", "contribution"],
                   [[s["representative"], s["class_size"], s["centralizer_order"], s["component"], s["age"],
                     ", ".join(f"{k}={v}" for k, v in s["contribution"].items())] for s in res["sectors"]]),
            "", f"Invariant part: p11 = {res['invariant']['p11']}, p12 = {res['invariant']['p12']}",
        ])
    elif cmd == "wps":
        body = "\n".join([
            f"# Weighted projective checks (n = {res['n']})", "",
            _table(["p", "m(p)", "k(p)", "q(p)"], [[r["p"], r["m"], r["k"], r["q"]] for r in res["primes"]]), "",
            f"well-formed: {str(res['well_formed']).lower()}",
            f"crepant resolution: {str(res['crepant']).lower()}",
        ])
    elif cmd == "fixed":
        body = "\n".join([
            f"# Fixed locus of {res['element']}", "",
            _table(["kind", "count", "genus", "euler"],
                   [[c["kind"], c["count"], c["genus"], c["euler"]] for c in res["components"]]), "",
            f"Euler characteristic: {res['euler']}",
        ])
    elif cmd == "fibers":
        body = "\n".join([
            f"# Singular fibers (n = {res['n']})", "",
            f"{res['singular_fibers']} fibers at lambda^{res['n'] + 1} = 1, "
            f"{res['nodes_per_fiber']} nodes each",
        ])
    elif cmd == "lattice":
        body = _lattice_markdown(report["inputs"]["subcommand"], res)
    else:
        raise KeyError(cmd)
    return body + "\n"


def _lattice_markdown(sub: str, res: Dict) -> str:
    if sub == "lines":
        return f"# Lines on the Fermat quartic\n\n{res['count']} lines, families {res['families']}"
    if sub == "kummer-test":
        t = res["transcendental"]
        return "\n".join([
            "# Halving test for T(X_lambda)", "",
            _table(["rank", "determinant", "invariant factors", "twice", "even", "halvable"],
                   [[t["rank"], t["determinant"], t["invariant_factors"], res["twice"], res["even"], res["halvable"]]]),
        ])
    return "\n".join([
        f"# {res['name']}", "",
        _table(["rank", "determinant", "signature", "invariant factors", "even"],
               [[res["rank"], res["determinant"], tuple(res["signature"]), res["invariant_factors"], res["even"]]]),
    ])
