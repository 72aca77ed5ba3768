"""JSON round-trips for module-comodules and q-maps.

File formats (all indices 0-based, all scalars exact strings like "-3/4"):

Yetter-Drinfel'd module::

    {
      "hopf": {"kind": "group_algebra", "group": {"elements": [...], "mul": [[...]]}}
            | {"kind": "first_order_enveloping", "lie": <Leibniz JSON, must be Lie>,
               "degree": 2},
      "basis": ["...", ...],
      "action":   [[{"<m_idx>": "coeff", ...}, ...], ...],   # row per basis vector,
                                                             # entry per generator
      "coaction": [[[m_idx, h_idx, "coeff"], ...], ...]
    }

Generators are the group elements in order for a group algebra, and the
degree-1 monomials in Lie-basis order for an enveloping descriptor.

q-map::

    {"q": [{"<h_idx>": "coeff", ...}, ...]}    # one sparse H-vector per basis vector
"""

from __future__ import annotations

from .envelope import EnvelopingDescriptor, TruncatedPBW
from .errors import ValidationError
from .group_hopf import GroupAlgebraDescriptor
from .leibniz import LeibnizAlgebra
from .racks import FiniteGroup
from .scalars import QQ
from .yd import YDModule


def hopf_to_dict(hopf) -> dict:
    if isinstance(hopf, GroupAlgebraDescriptor):
        return {"kind": "group_algebra", "group": hopf.group.to_json_dict()}
    if isinstance(hopf, EnvelopingDescriptor):
        pbw = hopf.pbw
        lie = LeibnizAlgebra(pbw.lie_labels, pbw.brackets, pbw.field)
        return {
            "kind": "first_order_enveloping",
            "lie": lie.to_json_dict(),
            "degree": pbw.degree,
        }
    raise ValidationError(f"cannot serialize descriptor {hopf!r}")


def hopf_from_dict(d, field=QQ):
    try:
        kind = d["kind"]
    except (KeyError, TypeError) as exc:
        raise ValidationError("hopf JSON needs a kind") from exc
    if kind == "group_algebra":
        return GroupAlgebraDescriptor(FiniteGroup.from_json_dict(d["group"]), field)
    if kind == "first_order_enveloping":
        lie = LeibnizAlgebra.from_json_dict(d["lie"], field)
        return EnvelopingDescriptor(
            TruncatedPBW(lie.brackets, int(d.get("degree", 2)), lie.basis, field)
        )
    raise ValidationError(f"unknown hopf kind {kind!r}")


def yd_to_dict(module: YDModule) -> dict:
    return {
        "hopf": hopf_to_dict(module.hopf),
        "basis": list(module.basis),
        "action": [
            [{str(m): str(c) for m, c in sorted(vec.items())} for vec in row]
            for row in module.action
        ],
        "coaction": [
            [[m, h, str(c)] for m, h, c in terms] for terms in module.coaction
        ],
    }


def yd_from_dict(d, field=QQ) -> YDModule:
    try:
        hopf = hopf_from_dict(d["hopf"], field)
        basis = d["basis"]
        action = [
            [{int(m): field.parse(c) for m, c in vec.items()} for vec in row]
            for row in d["action"]
        ]
        coaction = [
            [(int(m), int(h), field.parse(c)) for m, h, c in terms]
            for terms in d["coaction"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValidationError("module JSON needs hopf/basis/action/coaction") from exc
    return YDModule(hopf, basis, action, coaction)


def q_to_dict(q) -> dict:
    return {"q": [{str(h): str(c) for h, c in sorted(v.items())} for v in q]}


def q_from_dict(d, field=QQ):
    try:
        return [{int(h): field.parse(c) for h, c in v.items()} for v in d["q"]]
    except (KeyError, TypeError) as exc:
        raise ValidationError("q JSON needs a q list") from exc
