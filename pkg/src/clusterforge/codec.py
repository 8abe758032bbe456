"""File formats: .quiver text and JSON, .qp, .seed and .surf JSON.

Canonical JSON (sorted keys, no whitespace, arrows sorted) is bit-stable and
used for golden files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cluster import Seed
from .laurent import LaurentPoly
from .qp import QP, Potential
from .quiver import Quiver
from . import surface as surf


def canon_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- quivers -----------------------------------------------------------------

def quiver_to_text(q: Quiver) -> str:
    lines = [str(q.n)]
    lines += [f"{i} {j} {m}" for (i, j, m) in q.arrows]
    return "\n".join(lines) + "\n"

def quiver_from_text(text: str) -> Quiver:
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip() and not ln.startswith("#")]
    n = int(rows[0][0])
    arrows = []
    for row in rows[1:]:
        i, j = int(row[0]), int(row[1])
        m = int(row[2]) if len(row) > 2 else 1
        arrows.append((i, j, m))
    return Quiver.from_arrows(n, arrows)

def quiver_to_obj(q: Quiver) -> dict:
    return {"n": q.n, "arrows": [[i, j, m] for (i, j, m) in q.arrows]}

def quiver_from_obj(obj: dict) -> Quiver:
    return Quiver.from_arrows(int(obj["n"]), [tuple(a) for a in obj["arrows"]])

def load_quiver(path: str) -> Quiver:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return quiver_from_obj(json.loads(text))
    return quiver_from_text(text)


# -- quivers with potentials ---------------------------------------------------

def _coeff_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)

def qp_to_obj(qp: QP) -> dict:
    return {
        "n": qp.n,
        "arrows": [[s, t] for (s, t) in qp.arrows],
        "terms": [{"coeff": _coeff_str(c), "cycle": list(cyc)} for c, cyc in qp.potential.terms],
        "trunc": qp.trunc,
    }

def qp_from_obj(obj: dict) -> QP:
    arrows = tuple((int(s), int(t)) for s, t in obj["arrows"])
    terms = [(Fraction(t["coeff"]), tuple(t["cycle"])) for t in obj["terms"]]
    return QP(int(obj["n"]), arrows, Potential.make(terms, int(obj.get("trunc", 12))))

def load_qp(path: str) -> QP:
    with open(path) as fh:
        return qp_from_obj(json.load(fh))


# -- seeds and Laurent data ----------------------------------------------------

def laurent_to_obj(p: LaurentPoly) -> list:
    out = []
    for (xe, ye) in sorted(p.terms, key=LaurentPoly._key_order):
        out.append([list(xe), list(ye), _coeff_str(p.terms[(xe, ye)])])
    return out

def laurent_from_obj(n: int, obj) -> LaurentPoly:
    terms = {}
    for xe, ye, c in obj:
        terms[(tuple(xe), tuple(ye))] = Fraction(c)
    return LaurentPoly(n, terms)

def seed_to_obj(s: Seed) -> dict:
    return {
        "framed_quiver": quiver_to_obj(s.framed_quiver),
        "cluster": [laurent_to_obj(p) for p in s.cluster],
        "history": list(s.history),
    }

def seed_from_obj(obj: dict) -> Seed:
    fq = quiver_from_obj(obj["framed_quiver"])
    n = fq.n // 2
    cluster = tuple(laurent_from_obj(n, o) for o in obj["cluster"])
    return Seed(fq, cluster, tuple(obj.get("history", ())))


# -- surfaces --------------------------------------------------------------------

def surface_to_obj(S: surf.MarkedSurface) -> dict:
    return {"family": S.family, "outer": S.outer, "inner": S.inner}

def surface_from_obj(obj: dict) -> surf.MarkedSurface:
    return surf.MarkedSurface(obj["family"], int(obj["outer"]), int(obj.get("inner", 0)))

def arc_to_obj(a: surf.TaggedArc) -> dict:
    return {"key": list(a.key), "tag": a.tag}

def arc_from_obj(S: surf.MarkedSurface, obj: dict) -> surf.TaggedArc:
    key = obj["key"]
    return surf.TaggedArc(S, tuple([key[0]] + [int(x) for x in key[1:]]), int(obj.get("tag", 0)))

def triangulation_to_obj(T: surf.Triangulation) -> dict:
    return {"surface": surface_to_obj(T.surface), "arcs": [arc_to_obj(a) for a in T.arcs]}

def triangulation_from_obj(obj: dict) -> surf.Triangulation:
    S = surface_from_obj(obj["surface"])
    return surf.Triangulation(S, tuple(arc_from_obj(S, a) for a in obj["arcs"]))

def laminate_to_obj(l: surf.Laminate) -> dict:
    out = {"kind": l.kind}
    if l.kind == "elementary":
        out["of"] = arc_to_obj(l.of)
    elif l.kind == "exceptional":
        out["anchor"] = l.anchor
    else:
        out["copies"] = l.copies
    return out

def laminate_from_obj(S: surf.MarkedSurface, obj: dict) -> surf.Laminate:
    kind = obj["kind"]
    if kind == "elementary":
        return surf.elementary(arc_from_obj(S, obj["of"]))
    if kind == "exceptional":
        return surf.exceptional(S, int(obj["anchor"]))
    return surf.closed_core(S, int(obj.get("copies", 1)))
