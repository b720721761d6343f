"""Normal ordering (straightening) of diagram composites.

A term is a finite acyclic composite of the generators

* coaction  (module line -> bialgebra leg (x) module line)
* action    (bialgebra leg (x) module line -> module line)
* bracket   (two legs -> one leg)
* cobracket (one leg -> two legs)
* decoration idempotents sitting on legs

with endomorphism type: every leg is produced and consumed inside the term.
Straightening rewrites such a term into the canonical basis: per module
line all coactions precede all actions, no bracket or cobracket nodes
remain, and every leg runs from one coaction to one action carrying a
single decoration.

Oriented rules
--------------

``ACT_MU``      an action fed by a bracket expands into the two orderings
                of the bracket's arguments acting in sequence (signs +, -).
``DELTA_COACT`` a cobracket fed by a coaction leg splits the coaction in
                two (signs +, - with the leg swap).
``COCYCLE``     a cobracket fed by a bracket is reordered into the four
                terms with the cobracket applied to one argument and the
                bracket recombining one of its halves.
``EXCHANGE``    an action immediately followed by a coaction on the same
                line becomes: swapped pair (+), a bracket term (+) joining
                the action's leg with a fresh coaction's leg, and a
                cobracket term (-) splitting the action's leg.
``PUSH_MU``     a decoration on a bracket's output enumerates two-part
                decompositions onto its inputs.
``PUSH_DELTA``  a decoration on a cobracket's input enumerates two-part
                decompositions onto its outputs.

Termination
-----------

The single suggested lexicographic measure (bracket/cobracket count,
inversions, size) fails on EXCHANGE, which manufactures a bracket or a
cobracket; the engine therefore runs a staged strategy whose stages each
carry a strict measure.  Node count (actions + coactions + brackets +
cobrackets) is invariant under every rule, which bounds everything else.

Stage 1  While any bracket node exists, resolve one whose output feeds an
         action or cobracket (such exists: output chains are finite and
         end there).  Measure: (bracket count, number of bracket-above-
         cobracket pairs in leg reachability, decoration-push potential).
         ACT_MU lowers the first component; COCYCLE keeps it and lowers
         the second (the resolved pair stops counting, no new pair forms);
         pushes lower the third.  Afterwards every cobracket hangs in a
         tree rooted at a coaction leg, and such trees stay latent until
         stage 3.

Stage 2  While some action immediately precedes a coaction on a line,
         apply EXCHANGE at a pattern whose action is latest in a fixed
         topological order (so every action that consumes the coaction's
         leg tree is inversion-free).  Measure: the number of pairs
         (action A, coaction C, A before C on a common line) drops by at
         least one in all three branches: the swap removes the pattern
         pair; the bracket branch deletes the action and resolves the
         spawned bracket against inversion-free actions only, whose
         splitting creates no new pair; the cobracket branch deletes the
         pattern and extends a latent tree.  The spawned bracket descends
         a finite cobracket tree (COCYCLE) and vanishes (ACT_MU) before
         the next pattern is touched.

Stage 3  No inversions remain; resolve latent cobracket trees top-down
         (DELTA_COACT after PUSH_DELTA).  Coaction splits keep every line
         sorted, so stage 2 never reopens.  Measure: (cobracket count,
         push potential).

Stage 4  Expand undecorated legs over the monoid (the identity is the sum
         of the decoration idempotents), drop terms outside the allowed
         set in quotient mode, and read off the canonical basis data.

Randomized schedules vary the stage-1 resolution order, the stage-2
pattern among the provably safe ones, and the stage-3 tree order; all
terminate by the same measures and the canonical output is schedule
independent (a tested contract).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .monoids import DecorationMonoid, RootConeMod

# ports: producer ("c", nid) | ("m", nid) | ("d", nid, 0 | 1)
#        consumer ("a", nid) | ("m", nid, 0 | 1) | ("d", nid)


class _Term:
    """Mutable working graph; treated as value via .copy() before edits."""

    __slots__ = ("lines", "kind", "wire_to", "wire_from", "dec", "nxt")

    def __init__(self, n_slots: int):
        self.lines: list[list[int]] = [[] for _ in range(n_slots)]
        self.kind: dict[int, str] = {}
        self.wire_to: dict[tuple, tuple] = {}
        self.wire_from: dict[tuple, tuple] = {}
        self.dec: dict[tuple, object] = {}
        self.nxt = 0

    def copy(self) -> "_Term":
        t = _Term.__new__(_Term)
        t.lines = [line[:] for line in self.lines]
        t.kind = dict(self.kind)
        t.wire_to = dict(self.wire_to)
        t.wire_from = dict(self.wire_from)
        t.dec = dict(self.dec)
        t.nxt = self.nxt
        return t

    def fresh(self, kind: str) -> int:
        nid = self.nxt
        self.nxt += 1
        self.kind[nid] = kind
        return nid

    def connect(self, prod: tuple, cons: tuple, decor=None) -> None:
        self.wire_to[prod] = cons
        self.wire_from[cons] = prod
        if decor is not None:
            self.dec[prod] = decor

    def disconnect(self, prod: tuple) -> None:
        cons = self.wire_to.pop(prod)
        self.wire_from.pop(cons)
        self.dec.pop(prod, None)

    def drop_node(self, nid: int) -> None:
        self.kind.pop(nid)

    # -- inspection helpers -------------------------------------------------

    def mus(self) -> list[int]:
        return [n for n, k in self.kind.items() if k == "m"]

    def deltas(self) -> list[int]:
        return [n for n, k in self.kind.items() if k == "d"]

    def inversions(self) -> list[tuple[int, int]]:
        """Adjacent (action, coaction) patterns per line."""
        out = []
        for line in self.lines:
            for a, b in zip(line, line[1:]):
                if self.kind[a] == "a" and self.kind[b] == "c":
                    out.append((a, b))
        return out

    def line_pos(self) -> dict[int, tuple[int, int]]:
        return {nid: (li, pi) for li, line in enumerate(self.lines)
                for pi, nid in enumerate(line)}

    def has_bad_pair(self, act_id: int) -> bool:
        """Is some coaction after this action on its line?"""
        for line in self.lines:
            if act_id in line:
                i = line.index(act_id)
                return any(self.kind[n] == "c" for n in line[i + 1:])
        raise AssertionError("action not on any line")

    def leaf_actions(self, prod: tuple) -> list[int]:
        """Actions ultimately consuming a leg, through cobracket trees."""
        cons = self.wire_to[prod]
        if cons[0] == "a":
            return [cons[1]]
        if cons[0] == "d":
            did = cons[1]
            return (self.leaf_actions(("d", did, 0))
                    + self.leaf_actions(("d", did, 1)))
        raise AssertionError("unexpected consumer in latent tree")


def _merge_dec(term: _Term, prod: tuple, decor) -> bool:
    """Compose a decoration onto a leg; False kills the term (orthogonal
    idempotents)."""
    old = term.dec.get(prod)
    if old is None:
        term.dec[prod] = decor
        return True
    return old == decor


# ---------------------------------------------------------------------------
# rule applications: each returns [(term, coefficient factor), ...]


def _apply_act_mu(t: _Term, act_id: int) -> list[tuple[_Term, Fraction]]:
    mid = t.wire_from[("a", act_id)][1]
    x_prod = t.wire_from[("m", mid, 0)]
    y_prod = t.wire_from[("m", mid, 1)]
    pos = t.line_pos()[act_id]
    slot = pos[0]
    out = []
    for first, second, sgn in ((y_prod, x_prod, 1), (x_prod, y_prod, -1)):
        s = t.copy()
        s.disconnect(("m", mid))
        dx = s.dec.pop(x_prod, None)
        dy = s.dec.pop(y_prod, None)
        s.wire_to.pop(x_prod), s.wire_from.pop(("m", mid, 0))
        s.wire_to.pop(y_prod), s.wire_from.pop(("m", mid, 1))
        s.drop_node(mid)
        s.drop_node(act_id)
        a1 = s.fresh("a")
        a2 = s.fresh("a")
        s.lines[slot][pos[1]:pos[1] + 1] = [a1, a2]
        dec_of = {x_prod: dx, y_prod: dy}
        s.connect(first, ("a", a1), dec_of[first])
        s.connect(second, ("a", a2), dec_of[second])
        out.append((s, Fraction(sgn)))
    return out


def _apply_delta_coact(t: _Term, did: int) -> list[tuple[_Term, Fraction]]:
    cid = t.wire_from[("d", did)][1]
    cons0 = t.wire_to[("d", did, 0)]
    cons1 = t.wire_to[("d", did, 1)]
    d0 = t.dec.get(("d", did, 0))
    d1 = t.dec.get(("d", did, 1))
    pos = t.line_pos()[cid]
    slot = pos[0]
    out = []
    # the split's first output feeds (second-emitted leg, +) then
    # (first-emitted leg, -)
    for wiring, sgn in ((("second", "first"), 1), (("first", "second"), -1)):
        s = t.copy()
        s.disconnect(("c", cid))
        s.wire_to.pop(("d", did, 0)), s.wire_from.pop(cons0)
        s.wire_to.pop(("d", did, 1)), s.wire_from.pop(cons1)
        s.dec.pop(("d", did, 0), None)
        s.dec.pop(("d", did, 1), None)
        s.drop_node(did)
        s.drop_node(cid)
        c1 = s.fresh("c")  # first in time
        c2 = s.fresh("c")
        s.lines[slot][pos[1]:pos[1] + 1] = [c1, c2]
        legs = {"first": ("c", c1), "second": ("c", c2)}
        s.connect(legs[wiring[0]], cons0, d0)
        s.connect(legs[wiring[1]], cons1, d1)
        out.append((s, Fraction(sgn)))
    return out


def _apply_cocycle(t: _Term, did: int) -> list[tuple[_Term, Fraction]]:
    mid = t.wire_from[("d", did)][1]
    x_prod = t.wire_from[("m", mid, 0)]
    y_prod = t.wire_from[("m", mid, 1)]
    cons0 = t.wire_to[("d", did, 0)]
    cons1 = t.wire_to[("d", did, 1)]
    d0 = t.dec.get(("d", did, 0))
    d1 = t.dec.get(("d", did, 1))
    out = []
    for delta_on, straight, sgn in (
            ("x", True, 1), ("y", True, -1), ("x", False, -1), ("y", False, 1)):
        s = t.copy()
        dx = s.dec.pop(x_prod, None)
        dy = s.dec.pop(y_prod, None)
        s.disconnect(("m", mid))
        s.wire_to.pop(x_prod), s.wire_from.pop(("m", mid, 0))
        s.wire_to.pop(y_prod), s.wire_from.pop(("m", mid, 1))
        s.wire_to.pop(("d", did, 0)), s.wire_from.pop(cons0)
        s.wire_to.pop(("d", did, 1)), s.wire_from.pop(cons1)
        s.dec.pop(("d", did, 0), None)
        s.dec.pop(("d", did, 1), None)
        s.drop_node(mid)
        s.drop_node(did)
        nd = s.fresh("d")
        nm = s.fresh("m")
        split, other = (x_prod, y_prod) if delta_on == "x" else (y_prod, x_prod)
        dec_of = {x_prod: dx, y_prod: dy}
        s.connect(split, ("d", nd), dec_of[split])
        s.connect(("d", nd, 1), ("m", nm, 0))
        s.connect(other, ("m", nm, 1), dec_of[other])
        if straight:
            s.connect(("d", nd, 0), cons0, d0)
            s.connect(("m", nm), cons1, d1)
        else:
            s.connect(("d", nd, 0), cons1, d1)
            s.connect(("m", nm), cons0, d0)
        out.append((s, Fraction(sgn)))
    return out


def _apply_exchange(t: _Term, act_id: int, coact_id: int
                    ) -> list[tuple[_Term, Fraction]]:
    x_prod = t.wire_from[("a", act_id)]
    cons_y = t.wire_to[("c", coact_id)]
    dy = t.dec.get(("c", coact_id))
    pos = t.line_pos()
    slot, pi = pos[act_id]
    assert pos[coact_id] == (slot, pi + 1)
    out = []

    s = t.copy()  # swap
    s.lines[slot][pi], s.lines[slot][pi + 1] = coact_id, act_id
    out.append((s, Fraction(1)))

    s = t.copy()  # bracket term: action and coaction fuse through a bracket
    dx = s.dec.pop(x_prod, None)
    s.wire_to.pop(x_prod), s.wire_from.pop(("a", act_id))
    s.disconnect(("c", coact_id))
    s.drop_node(act_id)
    s.drop_node(coact_id)
    c2 = s.fresh("c")
    nm = s.fresh("m")
    s.lines[slot][pi:pi + 2] = [c2]
    s.connect(x_prod, ("m", nm, 0), dx)
    s.connect(("c", c2), ("m", nm, 1))
    s.connect(("m", nm), cons_y, dy)
    out.append((s, Fraction(1)))

    s = t.copy()  # cobracket term
    dx = s.dec.pop(x_prod, None)
    s.wire_to.pop(x_prod), s.wire_from.pop(("a", act_id))
    s.disconnect(("c", coact_id))
    s.drop_node(act_id)
    s.drop_node(coact_id)
    a2 = s.fresh("a")
    nd = s.fresh("d")
    s.lines[slot][pi:pi + 2] = [a2]
    s.connect(x_prod, ("d", nd), dx)
    s.connect(("d", nd, 0), cons_y, dy)
    s.connect(("d", nd, 1), ("a", a2))
    out.append((s, Fraction(-1)))
    return out


def _apply_push_mu(t: _Term, mid: int,
                   monoid: DecorationMonoid) -> list[tuple[_Term, Fraction]]:
    alpha = t.dec[("m", mid)]
    x_prod = t.wire_from[("m", mid, 0)]
    y_prod = t.wire_from[("m", mid, 1)]
    out = []
    for beta, gamma in monoid.decompositions(alpha):
        s = t.copy()
        s.dec.pop(("m", mid))
        if _merge_dec(s, x_prod, beta) and _merge_dec(s, y_prod, gamma):
            out.append((s, Fraction(1)))
    return out


def _apply_push_delta(t: _Term, did: int,
                      monoid: DecorationMonoid) -> list[tuple[_Term, Fraction]]:
    prod = t.wire_from[("d", did)]
    alpha = t.dec[prod]
    out = []
    for beta, gamma in monoid.decompositions(alpha):
        s = t.copy()
        s.dec.pop(prod)
        if (_merge_dec(s, ("d", did, 0), beta)
                and _merge_dec(s, ("d", did, 1), gamma)):
            out.append((s, Fraction(1)))
    return out


# ---------------------------------------------------------------------------
# scheduling


class Scheduler:
    """Chooses among applicable redexes; the default takes the first of the
    canonically sorted candidates.  ``record`` accumulates a replayable
    trace as (tag, index) pairs."""

    def __init__(self, record: list | None = None):
        self.record = record

    def choose(self, tag: str, candidates: list):
        idx = self.pick(tag, len(candidates))
        if self.record is not None:
            self.record.append((tag, idx))
        return candidates[idx]

    def pick(self, tag: str, n: int) -> int:
        return 0


class RandomScheduler(Scheduler):
    def __init__(self, seed: int, record: list | None = None):
        super().__init__(record)
        self.rng = random.Random(seed)

    def pick(self, tag: str, n: int) -> int:
        return self.rng.randrange(n)


class ScriptedScheduler(Scheduler):
    """Replays a recorded trace."""

    def __init__(self, script: list):
        super().__init__(None)
        self.script = list(script)
        self.at = 0

    def pick(self, tag: str, n: int) -> int:
        tag0, idx = self.script[self.at]
        if tag0 != tag or not 0 <= idx < n:
            raise ValueError("trace does not match term")
        self.at += 1
        return idx


def _topo_order(t: _Term) -> dict[int, int]:
    """A topological linearization of the node DAG (line order + legs)."""
    succ: dict[int, set] = {n: set() for n in t.kind}
    indeg = {n: 0 for n in t.kind}
    for line in t.lines:
        for a, b in zip(line, line[1:]):
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
    for prod, cons in t.wire_to.items():
        a, b = prod[1], cons[1]
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    ready = sorted(n for n, d in indeg.items() if d == 0)
    order, k = {}, 0
    while ready:
        n = ready.pop(0)
        order[n] = k
        k += 1
        for m in sorted(succ[n]):
            indeg[m] -= 1
            if indeg[m] == 0:
                ready.append(m)
    assert len(order) == len(t.kind), "cycle in term graph"
    return order


def _resolve_mu_bundle(t: _Term, coeff: Fraction, monoid: DecorationMonoid,
                       sched: Scheduler) -> list[tuple[_Term, Fraction]]:
    """Eliminate every bracket node, returning bracket-free terms."""
    done: list[tuple[_Term, Fraction]] = []
    work = [(t, coeff)]
    while work:
        s, c = work.pop()
        mus = s.mus()
        if not mus:
            done.append((s, c))
            continue
        # follow an output chain down to an action or cobracket consumer
        mid = sched.choose("mu", sorted(mus))
        while s.wire_to[("m", mid)][0] == "m":
            mid = s.wire_to[("m", mid)][1]
        if ("m", mid) in s.dec:
            results = _apply_push_mu(s, mid, monoid)
        else:
            cons = s.wire_to[("m", mid)]
            if cons[0] == "a":
                results = _apply_act_mu(s, cons[1])
            else:
                results = _apply_cocycle(s, cons[1])
        work.extend((s2, c * c2) for s2, c2 in results)
    return done


def straighten_graph(t0: _Term, monoid: DecorationMonoid,
                     sched: Scheduler | None = None) -> dict[tuple, Fraction]:
    """Run the staged strategy; returns canonical basis keys -> coefficients."""
    sched = sched or Scheduler()
    out: dict[tuple, Fraction] = {}

    # stage 1: brackets
    arch = _resolve_mu_bundle(t0, Fraction(1), monoid, sched)

    # stage 2: inversions (latest-action patterns; brackets resolved inline)
    sorted_terms: list[tuple[_Term, Fraction]] = []
    work = arch
    while work:
        t, c = work.pop()
        inv = t.inversions()
        if not inv:
            sorted_terms.append((t, c))
            continue
        order = _topo_order(t)
        safe = [p for p in inv
                if not any(t.has_bad_pair(a)
                           for a in t.leaf_actions(("c", p[1])))]
        safe.sort(key=lambda p: -order[p[0]])
        assert safe, "no safe pattern despite inversions"
        act_id, coact_id = sched.choose("exchange", safe)
        for s, c2 in _apply_exchange(t, act_id, coact_id):
            work.extend(_resolve_mu_bundle(s, c * c2, monoid, sched))

    # stage 3: latent cobracket trees
    resolved: list[tuple[_Term, Fraction]] = []
    work = sorted_terms
    while work:
        t, c = work.pop()
        deltas = t.deltas()
        if not deltas:
            resolved.append((t, c))
            continue
        rooted = [d for d in deltas if t.wire_from[("d", d)][0] == "c"]
        assert rooted, "unrooted cobracket"
        did = sched.choose("delta", sorted(rooted))
        if t.wire_from[("d", did)] in t.dec:
            results = _apply_push_delta(t, did, monoid)
        else:
            results = _apply_delta_coact(t, did)
        work.extend((s, c * c2) for s, c2 in results)

    # stage 4: decoration expansion and readout
    for t, c in resolved:
        for key, c2 in _extract(t, monoid):
            new = out.get(key, Fraction(0)) + c * c2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _extract(t: _Term, monoid: DecorationMonoid
             ) -> list[tuple[tuple, Fraction]]:
    """Read the canonical basis key off an arch term.

    Key layout: (coactions, actions, perm, decor) with compositions per
    slot, the permutation sending coaction position to action position,
    and decorations indexed by action position.
    """
    n = len(t.lines)
    co_comp, ac_comp = [], []
    co_pos: dict[int, int] = {}
    ac_pos: dict[int, int] = {}
    cbase = 0
    for line in t.lines:
        coacts = [x for x in line if t.kind[x] == "c"]
        acts = [x for x in line if t.kind[x] == "a"]
        assert line == coacts + acts, "line not sorted at extraction"
        for i, x in enumerate(coacts):
            co_pos[x] = cbase + i + 1
        cbase += len(coacts)
        co_comp.append(len(coacts))
        ac_comp.append(len(acts))
    abase = 0
    for line in t.lines:
        acts = [x for x in line if t.kind[x] == "a"]
        for i, x in enumerate(acts):
            ac_pos[x] = abase + len(acts) - i
        abase += len(acts)
    total = cbase
    perm = [0] * total
    strand_dec: list = [None] * total  # by action position
    for prod, cons in t.wire_to.items():
        assert prod[0] == "c" and cons[0] == "a", "non-arch wire at extraction"
        q = co_pos[prod[1]]
        p = ac_pos[cons[1]]
        perm[q - 1] = p
        strand_dec[p - 1] = t.dec.get(prod)
    open_positions = [i for i, d in enumerate(strand_dec) if d is None]
    zero = monoid.zero()
    quotient = isinstance(monoid, RootConeMod)
    choices = (itertools.product(monoid.elements(), repeat=len(open_positions))
               if not monoid.is_trivial() else [()])
    out = []
    for choice in choices:
        if monoid.is_trivial():
            dec = [zero] * total
        else:
            dec = list(strand_dec)
            for i, pos in enumerate(open_positions):
                dec[pos] = choice[i]
        if quotient and any(not monoid.is_allowed(d) for d in dec):
            continue
        key = (tuple(co_comp), tuple(ac_comp), tuple(perm), tuple(dec))
        out.append((key, Fraction(1)))
    return out


# ---------------------------------------------------------------------------
# building terms


def term_of_basis_pair(n: int, s_key: tuple, t_key: tuple) -> _Term:
    """Graph of the composite ``s after t`` of two canonical basis keys."""
    t = _Term(n)
    for key in (t_key, s_key):
        co_comp, ac_comp, perm, dec = key
        legs = {}
        for slot in range(n):
            for _ in range(co_comp[slot]):
                cid = t.fresh("c")
                t.lines[slot].append(cid)
                legs[len(legs) + 1] = cid
        actions = {}
        abase = 0
        for slot in range(n):
            acts = [t.fresh("a") for _ in range(ac_comp[slot])]
            t.lines[slot].extend(reversed(acts))
            for i, aid in enumerate(acts):
                actions[abase + i + 1] = aid
            abase += len(acts)
        for q, cid in legs.items():
            p = perm[q - 1]
            decor = dec[p - 1]
            t.connect(("c", cid), ("a", actions[p]), decor)
    return t


def term_of_key(n: int, key: tuple) -> _Term:
    unit = ((0,) * n, (0,) * n, (), ())
    return term_of_basis_pair(n, key, unit)
