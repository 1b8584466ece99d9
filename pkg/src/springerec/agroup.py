"""Component groups of nilpotent orbits in classical types.

For a valid orbit partition, the stabilizer's component group in the full
isometry group (O or Sp; GL for type A) is an elementary abelian 2-group
with one involution generator z_i per part size i of generator parity:
even i for type C, odd i for types B and D (type A: no generators).  The
subgroup cut out by the special group (SO instead of O) keeps the products
of pairs of generators, so for B and D it consists of the even-size
supports; for A and C the two groups agree.

Elements are frozensets of generator part sizes (the identity is the empty
set).  Characters are tuples of signs aligned with the sorted generator
list.  All values here are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import InvalidElement, InvalidLabel, NonIntegralMultiplicity
from .partitions import is_very_even, mults, require_valid

IDENTITY = frozenset()


@dataclass(frozen=True)
class AGroupShape:
    """Generator data of the component group attached to one orbit label."""

    group: str
    gens: tuple  # sorted ascending part sizes with r_i > 0 of generator parity

    @property
    def a_rank(self) -> int:
        """Rank of the special-group subgroup inside the full component group."""
        if self.group in ("A", "C"):
            return len(self.gens)
        return max(len(self.gens) - 1, 0)

    @property
    def full_order(self) -> int:
        return 1 << len(self.gens)

    @property
    def a_order(self) -> int:
        return 1 << self.a_rank


def generator_parity(group: str) -> int | None:
    """Parity (i mod 2) of generator part sizes, or None for type A."""
    if group == "A":
        return None
    return 0 if group == "C" else 1


def shape_of(group: str, lam) -> AGroupShape:
    """Component-group shape of a valid orbit label.

    Very even type-D partitions have no odd parts, hence no generators: both
    orbits they label carry the trivial group.
    """
    require_valid(group, lam)
    par = generator_parity(group)
    if par is None:
        return AGroupShape(group, ())
    gens = tuple(sorted(i for i in mults(lam) if i % 2 == par))
    return AGroupShape(group, gens)


def normalize(shape: AGroupShape, sizes) -> frozenset:
    """Collapse a multiset of part sizes to a group element.

    Sizes outside the generator list act as the identity and are discarded;
    repeated sizes cancel in pairs (every generator is an involution).
    """
    counts = {}
    for s in sizes:
        if s in shape.gens:
            counts[s] = counts.get(s, 0) + 1
    return frozenset(s for s, c in counts.items() if c % 2 == 1)


def sgn(i: int, z: frozenset) -> int:
    """Value at z of the character sending z_i to -1 and other generators to +1."""
    return -1 if i in z else 1


def require_element(shape: AGroupShape, z) -> frozenset:
    z = frozenset(z)
    if not z <= set(shape.gens):
        raise InvalidElement("element %s not supported on generators %s" % (sorted(z), shape.gens))
    return z


def push_h(shape_parent: AGroupShape, shape_child: AGroupShape, z, i: int) -> frozenset:
    """Image of z under the relabelling induced by a horizontal removal at i.

    z_a maps to z'_a for a != i, while z_i maps to z'_{i-2} (the identity
    when i = 2); the result is normalized in the child shape.
    """
    z = require_element(shape_parent, z)
    return normalize(shape_child, (i - 2 if a == i else a for a in z))


def push_v(shape_parent: AGroupShape, shape_child: AGroupShape, z, i: int) -> frozenset:
    """Image of z under a vertical removal at i: z_a maps to z'_a throughout.

    When the two removed rows were the only ones of length i, z'_i
    degenerates to the identity; normalization handles that.
    """
    z = require_element(shape_parent, z)
    return normalize(shape_child, z)


def tau_element(shape_child: AGroupShape, i: int) -> frozenset:
    """The element z'_i z'_{i-2} of the child group, normalized."""
    return normalize(shape_child, (s for s in (i, i - 2) if s >= 1))


def elements(shape: AGroupShape, over: str = "A") -> list:
    """All elements of the chosen subgroup, in a deterministic order.

    ``over`` is ``"A"`` (special-group subgroup) or ``"Atilde"`` (full
    component group).  For types A and C the two coincide.
    """
    _check_over(over)
    even_only = over == "A" and shape.group in ("B", "D")
    out = []
    for k in range(len(shape.gens) + 1):
        if even_only and k % 2 == 1:
            continue
        out.extend(frozenset(c) for c in combinations(shape.gens, k))
    return out


def characters(shape: AGroupShape, over: str = "A") -> list:
    """Characters of the chosen subgroup as sign tuples over ``shape.gens``.

    Characters of the index-2 subgroup (types B/D) are classes of full
    characters under simultaneous negation; the canonical representative
    carries ``+`` at the smallest generator.
    """
    _check_over(over)
    full = list(product((1, -1), repeat=len(shape.gens)))
    if over == "Atilde" or shape.group in ("A", "C") or not shape.gens:
        return full
    return [signs for signs in full if signs[0] == 1]


def char_value(shape: AGroupShape, signs, z: frozenset) -> int:
    val = 1
    for g, s in zip(shape.gens, signs):
        if g in z:
            val *= s
    return val


def char_name(signs) -> str:
    """Render a sign tuple as a '+'/'-' string; '.' for the trivial group."""
    return "".join("+" if s > 0 else "-" for s in signs) or "."


def hadamard_multiplicities(shape: AGroupShape, values: dict, over: str = "A") -> dict:
    """Character multiplicities from trace values on a subgroup.

    ``values`` maps every element of the chosen subgroup to the trace of its
    action; the multiplicity of a character is the averaged twisted sum.
    Raises NonIntegralMultiplicity unless every multiplicity is a
    nonnegative integer, which flags an upstream inconsistency.
    """
    elems = elements(shape, over)
    order = len(elems)
    out = {}
    for signs in characters(shape, over):
        total = sum(char_value(shape, signs, z) * values[z] for z in elems)
        q, r = divmod(total, order)
        if r != 0 or q < 0:
            raise NonIntegralMultiplicity(
                "character %s of %s: twisted sum %d not a nonnegative multiple of %d"
                % (char_name(signs), shape, total, order)
            )
        out[char_name(signs)] = q
    return out


def resum_values(shape: AGroupShape, mult_by_name: dict, over: str = "A") -> dict:
    """Inverse of the multiplicity transform: trace values from multiplicities."""
    named = {char_name(s): s for s in characters(shape, over)}
    out = {}
    for z in elements(shape, over):
        out[z] = sum(
            mult_by_name.get(name, 0) * char_value(shape, named[name], z) for name in named
        )
    return out


def minus_identity_image(shape: AGroupShape, lam) -> frozenset:
    """Image of the central element -1 of the isometry group: prod z_i^{r_i}."""
    ms = mults(lam)
    return frozenset(i for i in shape.gens if ms[i] % 2 == 1)


def _check_over(over: str) -> None:
    if over not in ("A", "Atilde"):
        raise InvalidLabel("subgroup selector must be 'A' or 'Atilde', got %r" % (over,))


def shape_of_label(label) -> AGroupShape:
    if is_very_even(label.group, label.parts):
        return AGroupShape(label.group, ())
    return shape_of(label.group, label.parts)
