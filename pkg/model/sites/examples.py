"""
Example presheaves built from representables by colimits and joins.

    representable(c)   the Yoneda presheaf of c
    boundary(c)        union of the images of the proper monos into c
    loop_Y             y([1]) with its two vertices identified
    collapsed_Z        y([2]) with its boundary collapsed to a point

Objects may be given by label (``[2]``) or, on Δ truncations, by their
number (``2``).
"""

import logging
import re
from typing import Callable, Dict, List, Optional

from model.errors import IncompatibleBase, MalformedInput
from model.fincat.category import FinCategory
from model.fincat.morphisms import iso_mask, mono_mask
from model.fincat.structure import terminal_object
from model.presheaf.colimits import coequalizer, pushout
from model.presheaf.lattice import Subpresheaf, bottom, join, principal
from model.presheaf.presheaf import Presheaf, global_element, terminal_presheaf, to_terminal, yoneda
from .registrations.delta import ordinal

logger = logging.getLogger(__name__)

_EXPRESSION = re.compile(r"^\s*(?P<name>[A-Za-z_]\w*)\s*(?:\(\s*(?P<arg>[^()]*?)\s*\))?\s*$")


def _object(base: FinCategory, token: Optional[str], example: str) -> str:
    if token is None or token == "":
        raise MalformedInput(f"{example} needs an object argument")
    if base.has_object(token):
        return token
    if token.isdigit() and base.has_object(ordinal(int(token))):
        return ordinal(int(token))
    raise IncompatibleBase(f"{example}({token}): {base.name} has no such object")


def representable(base: FinCategory, c: str) -> Presheaf:
    return yoneda(base, c)


def _proper_faces(base: FinCategory, c: str) -> Subpresheaf:
    """Join of the images of the non-invertible monos into c, inside y(c)."""
    Yc = yoneda(base, c)
    mono, iso = mono_mask(base), iso_mask(base)
    faces = bottom(Yc)
    for g in base.into(c):
        if mono[g] and not iso[g]:
            faces = join(faces, principal(Yc, base.dom(g), Yc.position(base.dom(g), base.label(g))))
    return faces


def boundary(base: FinCategory, c: str) -> Presheaf:
    sub, _ = _proper_faces(base, c).as_presheaf(name=f"boundary({c})")
    return sub


def loop_y(base: FinCategory) -> Presheaf:
    """Coequalizer of the two points 1 ⇉ y([1])."""
    point, edge = ordinal(0), ordinal(1)
    if not (base.has_object(point) and base.has_object(edge)) or terminal_object(base) != point:
        raise IncompatibleBase(f"loop_Y needs a Δ truncation with [1], got {base.name}")
    Y1 = yoneda(base, edge)
    vertices = Y1.at(point)
    if len(vertices) != 2:
        raise IncompatibleBase(f"loop_Y needs exactly two points of [1] in {base.name}")
    one = terminal_presheaf(base)
    p = global_element(Y1, one, point, vertices[0])
    q = global_element(Y1, one, point, vertices[1])
    Y, _ = coequalizer(p, q, name="loop_Y")
    return Y


def collapsed_z(base: FinCategory) -> Presheaf:
    """Pushout of B → 1 and B → y([2]), B the boundary of [2]."""
    triangle = ordinal(2)
    if not base.has_object(triangle) or terminal_object(base) != ordinal(0):
        raise IncompatibleBase(f"collapsed_Z needs a Δ truncation with [2], got {base.name}")
    B, inclusion = _proper_faces(base, triangle).as_presheaf(name="boundary([2])")
    Z, _, _ = pushout(to_terminal(B, terminal_presheaf(base)), inclusion, name="collapsed_Z")
    return Z


EXAMPLES: Dict[str, Callable[..., Presheaf]] = {
    "representable": representable,
    "boundary": boundary,
    "loop_Y": loop_y,
    "collapsed_Z": collapsed_z,
}

_TAKES_OBJECT = {"representable", "boundary"}


def example_names() -> List[str]:
    return sorted(EXAMPLES)


def example(expression: str, base: FinCategory) -> Presheaf:
    """
    Build an example presheaf from an expression such as ``representable([2])``.

    Raises:
        MalformedInput: unknown example or malformed expression
        IncompatibleBase: the base lacks the objects the example needs
    """
    match = _EXPRESSION.match(expression)
    if match is None:
        raise MalformedInput(f"malformed example expression {expression!r}")
    name, arg = match.group("name"), match.group("arg")
    if name not in EXAMPLES:
        raise MalformedInput(f"unknown example {name!r} (known: {', '.join(example_names())})")
    if name in _TAKES_OBJECT:
        result = EXAMPLES[name](base, _object(base, arg, name))
    else:
        if arg:
            raise MalformedInput(f"{name} takes no argument")
        result = EXAMPLES[name](base)
    logger.debug("example %s over %s: sizes %s", expression, base.name, result.sizes())
    return result
