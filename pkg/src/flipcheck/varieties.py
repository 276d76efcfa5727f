"""Built-in Hodge diamonds.

The three hand-entered tables ship as embedded JSON assets in the interchange
schema ``{"dim": n, "entries": [[p, q, value], ...]}`` with a ``provenance``
field saying where the numbers come from; the loader ignores unknown keys.
Everything else (projective spaces, curves, products) is generated.
"""

from __future__ import annotations

import json
import re

from .hodge import HodgeDiamond

# One asset per variety whose Hodge numbers are taken from the literature
# rather than computed here.
_ASSETS: dict[str, str] = {
    # Smooth del Pezzo threefold of degree 2: double cover of P^3 branched
    # over a quartic surface.  b_3 = 20 with h^{2,1} = h^{1,2} = 10.
    "quartic-double-solid": """
    {
      "provenance": "quartic double solid (degree-2 del Pezzo threefold); h^{1,1}=1, h^{2,1}=10, classical",
      "dim": 3,
      "entries": [[0, 0, 1], [1, 1, 1], [1, 2, 10], [2, 1, 10], [2, 2, 1], [3, 3, 1]]
    }
    """,
    # Surface of lines on a general quartic double solid (branch quartic
    # containing no lines); irregular surface with h^1(Omega) = 220 after
    # Welters' cohomological study.
    "f1-quartic-double-solid": """
    {
      "provenance": "Fano surface of lines on a general quartic double solid; h^{1,1}=220 per Welters (1981)",
      "dim": 2,
      "entries": [[0, 0, 1], [1, 1, 220], [2, 2, 1]]
    }
    """,
    # Degree-2 del Pezzo surface: blowup of P^2 in 7 points, Picard rank 8.
    "degree2-del-pezzo-surface": """
    {
      "provenance": "degree-2 del Pezzo surface (P^2 blown up in 7 points); h^{1,1} = 8",
      "dim": 2,
      "entries": [[0, 0, 1], [1, 1, 8], [2, 2, 1]]
    }
    """,
}

_CURVE_RE = re.compile(r"^curve-g(\d+)$")


def point() -> HodgeDiamond:
    return HodgeDiamond(0, {(0, 0): 1}, validated=True)


def projective_space(n: int) -> HodgeDiamond:
    """P^n: ones along the diagonal."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return HodgeDiamond(n, {(p, p): 1 for p in range(n + 1)}, validated=True)


def curve(g: int) -> HodgeDiamond:
    """Smooth projective curve of genus ``g``."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    entries = {(0, 0): 1, (1, 1): 1}
    if g:
        entries[(1, 0)] = g
        entries[(0, 1)] = g
    return HodgeDiamond(1, entries, validated=True)


def intersection_of_two_quadrics(n: int) -> HodgeDiamond:
    """Smooth complete intersection of two quadrics in P^{n+2}, ``n`` odd.

    The middle cohomology matches H^1 of the hyperelliptic curve branched
    over the ``n + 3`` singular members of the pencil, of genus
    ``(n + 1) / 2``; all other Hodge numbers are those of projective space.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("only odd-dimensional intersections are tabulated")
    g = (n + 1) // 2
    entries = {(p, p): 1 for p in range(n + 1)}
    entries[((n + 1) // 2, (n - 1) // 2)] = g
    entries[((n - 1) // 2, (n + 1) // 2)] = g
    return HodgeDiamond(n, entries, validated=True)


def _load_asset(name: str) -> HodgeDiamond:
    data = json.loads(_ASSETS[name])
    return HodgeDiamond.from_json_dict(data).validate()


def builtin_names() -> list[str]:
    names = ["point", "p1", "p2", "p3", "curve-g<g>"]
    names.extend(sorted(_ASSETS))
    return names


def builtin(name: str) -> HodgeDiamond:
    """Look up a diamond by CLI name; raises ``KeyError`` for unknown names."""
    if name == "point":
        return point()
    m = re.fullmatch(r"p(\d+)", name)
    if m:
        return projective_space(int(m.group(1)))
    m = _CURVE_RE.fullmatch(name)
    if m:
        return curve(int(m.group(1)))
    if name in _ASSETS:
        return _load_asset(name)
    raise KeyError(name)
