"""The graded algebras of normally ordered diagrams on n module slots.

A basis element is stored as a key ``(coactions, actions, perm, decor)``:

* ``coactions``  composition giving the number of coaction legs per slot;
  legs are numbered 1..N, slot blocks in order, first-applied leftmost;
* ``actions``    composition giving action legs per slot; within a slot the
  position-1 leg is the last action applied;
* ``perm``       one-line permutation matching coaction position q to
  action position perm[q-1];
* ``decor``      decoration per strand, indexed by action position.

An algebra element is a finite rational linear combination of such keys in
canonical sorted order.  Multiplication straightens the composite diagram
(``x * y`` is "x after y") and is graded by the strand count N.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction

from .monoids import (DecorationMonoid, RootCone, RootConeMod, SPLIT, Split,
                      TRIVIAL, Trivial, monoid_from_json)
from .permutations import (all_permutations, block_starts, compositions,
                           identity, inverse, sign)
from . import rewrite

Key = tuple  # (coactions, actions, perm, decor)


def key_degree(key: Key) -> int:
    return len(key[2])


def sort_key(key: Key):
    co, ac, perm, dec = key
    return (len(perm), co, dec, perm, ac)


def unit_key(n: int) -> Key:
    return ((0,) * n, (0,) * n, (), ())


class AlgebraElement:
    """Immutable-by-convention linear combination of basis keys."""

    __slots__ = ("n", "monoid", "terms")

    def __init__(self, n: int, monoid: DecorationMonoid,
                 terms: dict[Key, Fraction] | None = None):
        self.n = n
        self.monoid = monoid
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int, monoid: DecorationMonoid = TRIVIAL) -> "AlgebraElement":
        return AlgebraElement(n, monoid)

    @staticmethod
    def unit(n: int, monoid: DecorationMonoid = TRIVIAL) -> "AlgebraElement":
        return AlgebraElement(n, monoid, {unit_key(n): Fraction(1)})

    @staticmethod
    def basis(n: int, key: Key,
              monoid: DecorationMonoid = TRIVIAL) -> "AlgebraElement":
        _check_key(n, key, monoid)
        return AlgebraElement(n, monoid, {key: Fraction(1)})

    # -- linear structure ---------------------------------------------------

    def _assert_compatible(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"slot count mismatch: {self.n} vs {other.n}")
        if self.monoid.key() != other.monoid.key():
            raise ValueError("decoration monoid mismatch")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._assert_compatible(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            new = terms.get(k, Fraction(0)) + c
            if new:
                terms[k] = new
            else:
                terms.pop(k, None)
        return AlgebraElement(self.n, self.monoid, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "AlgebraElement":
        if isinstance(scalar, (int, Fraction)):
            return AlgebraElement(self.n, self.monoid,
                                  {k: c * scalar for k, c in self.terms.items()})
        return NotImplemented

    def __neg__(self) -> "AlgebraElement":
        return (-1) * self

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return other * self
        self._assert_compatible(other)
        out: dict[Key, Fraction] = {}
        for ks, cs in self.terms.items():
            for kt, ct in other.terms.items():
                for k, c in compose_basis(self.n, ks, kt, self.monoid).items():
                    new = out.get(k, Fraction(0)) + cs * ct * c
                    if new:
                        out[k] = new
                    else:
                        out.pop(k, None)
        return AlgebraElement(self.n, self.monoid, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.n == other.n
                and self.monoid.key() == other.monoid.key()
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.monoid.key(),
                     tuple(sorted(self.terms.items(),
                                  key=lambda kv: sort_key(kv[0])))))

    def is_zero(self) -> bool:
        return not self.terms

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    def degrees(self) -> set[int]:
        return {key_degree(k) for k in self.terms}

    def graded_component(self, deg: int) -> "AlgebraElement":
        return AlgebraElement(self.n, self.monoid,
                              {k: c for k, c in self.terms.items()
                               if key_degree(k) == deg})

    def counit(self) -> Fraction:
        return self.terms.get(unit_key(self.n), Fraction(0))

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k, c in self.sorted_terms():
            co, ac, perm, dec = k
            body = f"<co={co}|ac={ac}|s={perm}|d={dec}>"
            bits.append(f"{c}*{body}")
        return " + ".join(bits)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "monoid": self.monoid.to_json(),
            "terms": [
                {"coeff": str(c), "coactions": list(k[0]), "actions": list(k[1]),
                 "perm": list(k[2]), "decor": [_dec_json(d) for d in k[3]]}
                for k, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraElement":
        monoid = monoid_from_json(data["monoid"])
        n = data["n"]
        terms: dict[Key, Fraction] = {}
        for t in data["terms"]:
            key = (tuple(t["coactions"]), tuple(t["actions"]),
                   tuple(t["perm"]), tuple(_dec_unjson(d) for d in t["decor"]))
            _check_key(n, key, monoid)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(t["coeff"])
        return AlgebraElement(n, monoid, terms)


def _dec_json(d):
    return list(d) if isinstance(d, tuple) else d


def _dec_unjson(d):
    return tuple(d) if isinstance(d, list) else d


def _check_key(n: int, key: Key, monoid: DecorationMonoid) -> None:
    co, ac, perm, dec = key
    if len(co) != n or len(ac) != n:
        raise ValueError("composition length != slot count")
    total = sum(co)
    if sum(ac) != total or len(perm) != total or len(dec) != total:
        raise ValueError("inconsistent strand counts in key")
    if sorted(perm) != list(range(1, total + 1)):
        raise ValueError("perm is not a permutation")


# ---------------------------------------------------------------------------
# structure constants


_CACHE: dict[tuple, dict[Key, Fraction]] = {}
_CACHE_LOCK = threading.Lock()


def compose_basis(n: int, s_key: Key, t_key: Key,
                  monoid: DecorationMonoid = TRIVIAL) -> dict[Key, Fraction]:
    """Structure constants of ``s after t``, memoized.

    The cache is observationally transparent: entries are only ever the
    canonical straightening output, so concurrent recomputation is benign.
    """
    if s_key == unit_key(n):
        return {t_key: Fraction(1)}
    if t_key == unit_key(n):
        return {s_key: Fraction(1)}
    ck = (monoid.key(), n, s_key, t_key)
    hit = _CACHE.get(ck)
    if hit is not None:
        return hit
    term = rewrite.term_of_basis_pair(n, s_key, t_key)
    out = rewrite.straighten_graph(term, monoid)
    deg = key_degree(s_key) + key_degree(t_key)
    assert all(key_degree(k) == deg for k in out), "grading violated"
    with _CACHE_LOCK:
        _CACHE[ck] = out
    return out


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


# ---------------------------------------------------------------------------
# structured strand form: per-slot coaction/action orders plus decorations


def _structured(key: Key):
    co, ac, perm, dec = key
    co_list, q = [], 0
    for c in co:
        co_list.append(list(range(q + 1, q + c + 1)))
        q += c
    inv = inverse(perm)
    ac_list, p = [], 0
    for a in ac:
        ac_list.append([inv[p + i] for i in range(a)])
        p += a
    decor = {inv[p0]: dec[p0] for p0 in range(len(dec))}
    return co_list, ac_list, decor


def _key_of_structured(co_list, ac_list, decor) -> Key:
    co = tuple(len(b) for b in co_list)
    ac = tuple(len(b) for b in ac_list)
    strand_q = {}
    q = 0
    for block in co_list:
        for s in block:
            q += 1
            strand_q[s] = q
    perm = [0] * q
    dec = [None] * q
    p = 0
    for block in ac_list:
        for s in block:
            p += 1
            perm[strand_q[s] - 1] = p
            dec[p - 1] = decor[s]
    return (co, ac, tuple(perm), tuple(dec))


def _map_structured(x: AlgebraElement, fn, n_new: int,
                    monoid=None) -> AlgebraElement:
    """Apply ``fn(co_list, ac_list, decor) -> iterable of
    (co_list, ac_list, decor, coeff)`` to every term."""
    out: dict[Key, Fraction] = {}
    for k, c in x.terms.items():
        for co_list, ac_list, decor, c2 in fn(*_structured(k)):
            key = _key_of_structured(co_list, ac_list, decor)
            new = out.get(key, Fraction(0)) + c * c2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return AlgebraElement(n_new, monoid or x.monoid, out)


# ---------------------------------------------------------------------------
# cosimplicial structure


_FACE_SHAPES: dict[tuple, list] = {}


def _face_shapes(i: int, co: tuple, ac: tuple, perm: tuple) -> list:
    """Decoration-independent output shapes of a face map: each entry is
    (co2, ac2, perm2, strand_order) where strand_order lists, per new
    action position, the source strand (its coaction position)."""
    ck = (i, co, ac, perm)
    hit = _FACE_SHAPES.get(ck)
    if hit is not None:
        return hit
    n = len(co)
    key = (co, ac, perm, (None,) * len(perm))
    co_list, ac_list, decor = _structured(key)
    out = []

    def emit(new_co, new_ac):
        co2 = tuple(len(b) for b in new_co)
        ac2 = tuple(len(b) for b in new_ac)
        strand_q = {}
        q = 0
        for block in new_co:
            for s in block:
                q += 1
                strand_q[s] = q
        perm2 = [0] * q
        order = []
        for block in new_ac:
            for s in block:
                order.append(s)
                perm2[strand_q[s] - 1] = len(order)
        out.append((co2, ac2, tuple(perm2), tuple(order)))

    if i == 0:
        emit([[]] + co_list, [[]] + ac_list)
    elif i == n + 1:
        emit(co_list + [[]], ac_list + [[]])
    else:
        co_block = co_list[i - 1]
        ac_block = ac_list[i - 1]
        for co_take in _subsequences(co_block):
            co_rest = [s for s in co_block if s not in co_take]
            for ac_take in _subsequences(ac_block):
                ac_rest = [s for s in ac_block if s not in ac_take]
                emit(co_list[:i - 1] + [list(co_take), co_rest]
                     + co_list[i:],
                     ac_list[:i - 1] + [list(ac_take), ac_rest]
                     + ac_list[i:])
    _FACE_SHAPES[ck] = out
    return out


def face_map(i: int, x: AlgebraElement) -> AlgebraElement:
    """The i-th insertion/coproduct map into n+1 slots, 0 <= i <= n+1.

    i = 0 and i = n+1 insert a trivial slot; for 1 <= i <= n the strands of
    slot i distribute over the two tensor factors of the split slot in all
    ways, preserving their relative order.  Decorations ride along on their
    strands.
    """
    n = x.n
    if not 0 <= i <= n + 1:
        raise ValueError(f"face index {i} out of range 0..{n + 1}")
    out: dict[Key, Fraction] = {}
    for (co, ac, perm, dec), c in x.terms.items():
        for co2, ac2, perm2, order in _face_shapes(i, co, ac, perm):
            dec2 = tuple(dec[perm[s - 1] - 1] for s in order)
            key = (co2, ac2, perm2, dec2)
            new = out.get(key, Fraction(0)) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return AlgebraElement(n + 1, x.monoid, out)


def _subsequences(block: list):
    for r in range(len(block) + 1):
        yield from itertools.combinations(block, r)


def hochschild_d(x: AlgebraElement) -> AlgebraElement:
    """Alternating sum of the face maps; squares to zero."""
    out: dict[Key, Fraction] = {}
    for i in range(x.n + 2):
        sign = Fraction(-1) ** i
        for (co, ac, perm, dec), c in x.terms.items():
            for co2, ac2, perm2, order in _face_shapes(i, co, ac, perm):
                dec2 = tuple(dec[perm[s - 1] - 1] for s in order)
                key = (co2, ac2, perm2, dec2)
                new = out.get(key, Fraction(0)) + sign * c
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return AlgebraElement(x.n + 1, x.monoid, out)


def slot_permute(x: AlgebraElement, perm: tuple[int, ...]) -> AlgebraElement:
    """Conjugation by a permutation of the module slots: slot k moves to
    slot perm[k-1]."""
    if sorted(perm) != list(range(1, x.n + 1)):
        raise ValueError("bad slot permutation")

    def fn(co_list, ac_list, decor):
        new_co = [None] * x.n
        new_ac = [None] * x.n
        for k in range(x.n):
            new_co[perm[k] - 1] = co_list[k]
            new_ac[perm[k] - 1] = ac_list[k]
        yield new_co, new_ac, decor, Fraction(1)

    return _map_structured(x, fn, x.n)


def alt(x: AlgebraElement) -> AlgebraElement:
    """Antisymmetrization over slot permutations (a projector)."""
    out = AlgebraElement.zero(x.n, x.monoid)
    count = 0
    for perm in all_permutations(x.n):
        out = out + Fraction(sign(perm)) * slot_permute(x, perm)
        count += 1
    return Fraction(1, count) * out


# ---------------------------------------------------------------------------
# distinguished elements


def r_matrix(n: int, i: int, j: int,
             monoid: DecorationMonoid = TRIVIAL, decor=None) -> AlgebraElement:
    """One strand: action on slot i, coaction on slot j (i != j)."""
    if i == j:
        raise ValueError("r-matrix slots must differ")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("slot out of range")
    co = tuple(1 if k == j else 0 for k in range(1, n + 1))
    ac = tuple(1 if k == i else 0 for k in range(1, n + 1))
    dec = (decor if decor is not None else monoid.zero(),)
    return AlgebraElement(n, monoid, {(co, ac, (1,), dec): Fraction(1)})


def omega(n: int, i: int, j: int,
          monoid: DecorationMonoid = TRIVIAL) -> AlgebraElement:
    return r_matrix(n, i, j, monoid) + r_matrix(n, j, i, monoid)


def kappa(n: int, i: int, monoid: DecorationMonoid = TRIVIAL,
          decor=None) -> AlgebraElement:
    """The normally ordered Casimir on slot i: one strand, coaction then
    action on the same slot."""
    if not 1 <= i <= n:
        raise ValueError("slot out of range")
    co = tuple(1 if k == i else 0 for k in range(1, n + 1))
    dec = (decor if decor is not None else monoid.zero(),)
    return AlgebraElement(n, monoid, {(co, co, (1,), dec): Fraction(1)})


def kappa_alpha(alpha, monoid: DecorationMonoid, n: int = 1,
                i: int = 1) -> AlgebraElement:
    return kappa(n, i, monoid, decor=alpha)


def embed_slots(x: AlgebraElement, n_new: int,
                mapping: dict[int, int]) -> AlgebraElement:
    """Place an n-slot element into chosen slots of a larger algebra;
    unmapped target slots stay empty."""
    if sorted(mapping) != list(range(1, x.n + 1)):
        raise ValueError("mapping must cover source slots")
    if len(set(mapping.values())) != x.n or not all(
            1 <= v <= n_new for v in mapping.values()):
        raise ValueError("bad target slots")

    def fn(co_list, ac_list, decor):
        new_co = [[] for _ in range(n_new)]
        new_ac = [[] for _ in range(n_new)]
        for k in range(x.n):
            new_co[mapping[k + 1] - 1] = co_list[k]
            new_ac[mapping[k + 1] - 1] = ac_list[k]
        yield new_co, new_ac, decor, Fraction(1)

    return _map_structured(x, fn, n_new)


def is_invariant(x: AlgebraElement, small_r: AlgebraElement | None = None
                 ) -> bool:
    """Invariance: the commutators with the slot-0 r-matrix sums vanish.

    ``small_r`` is the 2-slot r-matrix used in the test (defaults to the
    zero-decorated one, which in split mode is the small sub-bialgebra
    r-matrix).
    """
    n = x.n
    r2 = small_r if small_r is not None else r_matrix(2, 1, 2, x.monoid)
    x_up = face_map(0, x)
    r_down = AlgebraElement.zero(n + 1, x.monoid)
    r_up = AlgebraElement.zero(n + 1, x.monoid)
    for k in range(1, n + 1):
        r_down = r_down + embed_slots(r2, n + 1, {1: 1, 2: k + 1})
        r_up = r_up + embed_slots(r2, n + 1, {1: k + 1, 2: 1})
    return (r_down.commutator(x_up).is_zero()
            and r_up.commutator(x_up).is_zero())


# ---------------------------------------------------------------------------
# maps between the differently decorated algebras


def alpha_map(x: AlgebraElement) -> AlgebraElement:
    """Undecorated -> split: every strand decorated 0."""
    return _redecorate(x, SPLIT, lambda total: [((0,) * total, Fraction(1))])


def beta_map(x: AlgebraElement) -> AlgebraElement:
    """Undecorated -> split: sum over all 0/1 decorations."""
    return _redecorate(
        x, SPLIT,
        lambda total: [(d, Fraction(1))
                       for d in itertools.product((0, 1), repeat=total)])


def _redecorate(x: AlgebraElement, monoid: DecorationMonoid,
                decorations) -> AlgebraElement:
    if not isinstance(x.monoid, Trivial):
        raise ValueError("source must be undecorated")
    out: dict[Key, Fraction] = {}
    for (co, ac, perm, _), c in x.terms.items():
        for dec, c2 in decorations(len(perm)):
            key = (co, ac, perm, dec)
            out[key] = out.get(key, Fraction(0)) + c * c2
    return AlgebraElement(x.n, monoid, out)


def cone_elements(monoid: RootCone | RootConeMod, support: set[int],
                  window: int) -> list[tuple]:
    """Monoid elements supported on the given coordinate set (1-based) with
    total weight at most ``window``."""
    if window > monoid.cap:
        raise ValueError("window exceeds monoid cap")
    return [a for a in RootCone(monoid.rank, monoid.cap).elements()
            if sum(a) <= window
            and all(a[k] == 0 for k in range(monoid.rank)
                    if k + 1 not in support)]


def rho_tilde_b(x: AlgebraElement, monoid: RootCone, support: set[int],
                window: int) -> AlgebraElement:
    """Undecorated -> cone: sum strand decorations over the sub-cone on the
    given diagram support, each strand truncated at the weight window."""
    if not isinstance(x.monoid, Trivial):
        raise ValueError("source must be undecorated")
    elts = cone_elements(monoid, support, window)
    return _redecorate(
        x, monoid,
        lambda total: [(d, Fraction(1))
                       for d in itertools.product(elts, repeat=total)])


def rho_tilde_pair(x: AlgebraElement, monoid: RootCone, small: set[int],
                   big: set[int], window: int) -> AlgebraElement:
    """Split -> cone for a nested pair of diagram supports: 0-strands sum
    over the small sub-cone, 1-strands over the big cone minus the small."""
    if not isinstance(x.monoid, Split):
        raise ValueError("source must be split-decorated")
    if not small <= big:
        raise ValueError("supports not nested")
    small_elts = cone_elements(monoid, small, window)
    big_elts = [a for a in cone_elements(monoid, big, window)
                if a not in set(small_elts)]
    out: dict[Key, Fraction] = {}
    for (co, ac, perm, dec), c in x.terms.items():
        pools = [small_elts if d == 0 else big_elts for d in dec]
        for choice in itertools.product(*pools):
            key = (co, ac, perm, tuple(choice))
            out[key] = out.get(key, Fraction(0)) + c
    return AlgebraElement(x.n, monoid, out)


def forget_split(x: AlgebraElement, zero_to: str = "id") -> AlgebraElement:
    """The two forgetful maps split -> undecorated.

    ``zero_to="id"``   keeps exactly the all-0 terms (1-strands die);
    ``zero_to="zero"`` keeps exactly the all-1 terms.
    """
    if not isinstance(x.monoid, Split):
        raise ValueError("source must be split-decorated")
    keep = 0 if zero_to == "id" else 1
    out = {}
    for (co, ac, perm, dec), c in x.terms.items():
        if all(d == keep for d in dec):
            out[(co, ac, perm, (0,) * len(dec))] = c
    return AlgebraElement(x.n, TRIVIAL, out)


def quotient_allowed(x: AlgebraElement,
                     monoid: RootConeMod) -> AlgebraElement:
    """Project a cone-decorated element to the quotient by the ideal of
    non-allowed decorations."""
    out = {k: c for k, c in x.terms.items()
           if all(monoid.is_allowed(d) for d in k[3])}
    return AlgebraElement(x.n, monoid, out)


def filter_window(x: AlgebraElement, window: int) -> AlgebraElement:
    """Keep terms whose strand decorations all have total weight <= window."""
    out = {k: c for k, c in x.terms.items()
           if all(sum(d) <= window for d in k[3])}
    return AlgebraElement(x.n, x.monoid, out)


# ---------------------------------------------------------------------------
# basis enumeration


def enumerate_basis(n: int, degree: int, monoid: DecorationMonoid = TRIVIAL,
                    window: int | None = None) -> list[Key]:
    """All basis keys of the given strand degree, canonically sorted.

    For cone monoids the decoration enumeration is truncated to the weight
    window (default: the monoid cap)."""
    decors = monoid.elements()
    if window is not None:
        decors = [d for d in decors if sum(d) <= window]
    keys = []
    comps = compositions(degree, n)
    for co in comps:
        for ac in comps:
            for perm in all_permutations(degree):
                for dec in itertools.product(decors, repeat=degree):
                    keys.append((co, ac, tuple(perm), tuple(dec)))
    return sorted(keys, key=sort_key)


def dim_formula(n: int, degree: int) -> int:
    """Exact dimension of the undecorated degree component."""
    from math import comb, factorial
    return comb(degree + n - 1, n - 1) ** 2 * factorial(degree)
