"""Breadth-first exploration of Cayley graphs of affine isometry groups.

Vertices are group elements, edges are right multiplication by a
generator in the word sense: appending letter x to a word moves from g
to image(x) * g (letters act in reading order, see words.evaluate).
Provides distance balls, coordination sequences, geodesic counting and
the harvest of shortest translation words that feeds the presentation
pipeline.
"""

from fractions import Fraction

from .affine import AffineIsometry, TranslationLattice, hnf_lattice, inverse
from .words import free_reduce

DEFAULT_MAX_ELEMENTS = 2_000_000
DEFAULT_RADIUS_CAP = 30
DEFAULT_STABLE_SPHERES = 3


class BallBoundExceeded(RuntimeError):
    pass


class LatticeNotFound(RuntimeError):
    pass


def _symmetrize(generators):
    """Signed letters with their images; inverses share the base name.

    `generators` is a list of (name, AffineIsometry).  Returns
    (names, images) where images maps signed letter -> isometry.
    """
    names = []
    images = {}
    for k, (name, g) in enumerate(generators, start=1):
        if not isinstance(g, AffineIsometry):
            raise TypeError(f"generator {name!r} is not an affine isometry")
        if g.is_identity():
            raise ValueError(f"generator {name!r} is the identity")
        names.append(name)
        images[k] = g
        images[-k] = inverse(g)
    return names, images


class BallIndex:
    """All elements within a word-length radius of the identity.

    entries: element -> (distance, letter) where letter is the signed
    generator index appended last on a shortest word (0 for the
    identity).  Discovery order is deterministic: spheres in order,
    within a sphere the elements of the previous sphere in discovery
    order, letters in order 1, -1, 2, -2, ...
    """

    def __init__(self, generators, radius, max_elements=DEFAULT_MAX_ELEMENTS):
        if radius < 0:
            raise ValueError("radius must be >= 0")
        names, images = _symmetrize(generators)
        self.generator_names = names
        self.images = images
        self.radius = radius
        d = generators[0][1].dimension
        ident = AffineIsometry.identity(d)
        self.entries = {ident: (0, 0)}
        self.spheres = [[ident]]
        letters = []
        for k in range(1, len(names) + 1):
            letters.append(k)
            letters.append(-k)
        self._letters = letters
        for r in range(1, radius + 1):
            sphere = []
            for g in self.spheres[r - 1]:
                for x in letters:
                    h = images[x] * g
                    if h in self.entries:
                        continue
                    if len(self.entries) >= max_elements:
                        raise BallBoundExceeded(
                            f"ball exceeded {max_elements} elements at radius {r}"
                        )
                    self.entries[h] = (r, x)
                    sphere.append(h)
            self.spheres.append(sphere)

    @property
    def sphere_sizes(self):
        return [len(s) for s in self.spheres]

    def distance(self, g):
        entry = self.entries.get(g)
        return None if entry is None else entry[0]

    def word_for(self, g):
        """A shortest word for g (first-discovered), or None."""
        if g not in self.entries:
            return None
        letters = []
        cur = g
        while True:
            dist, x = self.entries[cur]
            if dist == 0:
                break
            letters.append(x)
            cur = self.images[-x] * cur
        return tuple(reversed(letters))


def ball(generators, radius, max_elements=DEFAULT_MAX_ELEMENTS):
    return BallIndex(generators, radius, max_elements=max_elements)


def coordination_sequence(generators, radius, max_elements=DEFAULT_MAX_ELEMENTS):
    """Sphere sizes of the Cayley graph ball: |S_0|, |S_1|, ..., |S_r|."""
    return ball(generators, radius, max_elements=max_elements).sphere_sizes


class TranslationHarvest:
    """Result of shortest_translation_words.

    words: list of (word, vector) for every pure translation found, one
    shortest word per vector, ordered by (length, word).  lattice_words
    is a greedy shortest-first subset whose vectors generate the full
    harvested lattice (it may need more than rank(L) words).
    """

    def __init__(self, words, lattice_words, lattice, radius_used):
        self.words = words
        self.lattice_words = lattice_words
        self.lattice = lattice
        self.radius_used = radius_used


def shortest_translation_words(
    generators,
    rank=None,
    stable_spheres=DEFAULT_STABLE_SPHERES,
    radius_cap=DEFAULT_RADIUS_CAP,
    max_elements=DEFAULT_MAX_ELEMENTS,
):
    """Harvest shortest words with identity linear part from the Cayley ball.

    Expands sphere by sphere, recording, for each translation vector,
    the first (shortest, discovery-ordered) word evaluating to it.  The
    scan stops once the lattice spanned by the harvested vectors has
    reached `rank` (the ambient dimension when rank is None and full
    rank is achieved) and has not grown, nor dropped in index, for
    `stable_spheres` consecutive spheres.  This is a completeness
    heuristic only; soundness of anything built on the harvest is
    checked downstream by coset enumeration.
    """
    names, images = _symmetrize(generators)
    d = generators[0][1].dimension
    ident = AffineIsometry.identity(d)
    ident_linear = ident.linear
    entries = {ident: (0, 0)}
    prev_sphere = [ident]
    letters = []
    for k in range(1, len(names) + 1):
        letters.append(k)
        letters.append(-k)

    harvested = {}  # vector -> word
    order = []  # vectors in harvest order
    current = None  # TranslationLattice spanned so far
    stable = 0
    radius_used = 0

    def word_for(g):
        out = []
        cur = g
        while True:
            dist, x = entries[cur]
            if dist == 0:
                break
            out.append(x)
            cur = images[-x] * cur
        return tuple(reversed(out))

    for r in range(1, radius_cap + 1):
        sphere = []
        for g in prev_sphere:
            for x in letters:
                h = images[x] * g
                if h in entries:
                    continue
                if len(entries) >= max_elements:
                    raise BallBoundExceeded(
                        f"ball exceeded {max_elements} elements at radius {r}"
                    )
                entries[h] = (r, x)
                sphere.append(h)
                if h.linear == ident_linear:
                    v = h.translation
                    if v not in harvested:
                        harvested[v] = word_for(h)
                        order.append(v)
        prev_sphere = sphere
        radius_used = r
        if harvested:
            new = hnf_lattice(list(harvested), dimension=d)
            if current is not None and new.basis == current.basis:
                stable += 1
            else:
                stable = 0
            current = new
            target_rank = d if rank is None else rank
            if current.rank >= target_rank and stable >= stable_spheres:
                break
        if not sphere:
            break  # finite group, everything seen

    if current is None or (rank is not None and current.rank < rank):
        raise LatticeNotFound(
            f"no translation lattice of required rank within radius {radius_cap}"
        )

    pairs = [(harvested[v], v) for v in order]
    pairs.sort(key=lambda p: (len(p[0]), p[0]))

    # greedy shortest-first subset generating the whole lattice
    chosen = []
    span = None
    for w, v in pairs:
        cand = hnf_lattice([q for _, q in chosen] + [v], dimension=d)
        if span is None or cand.basis != span.basis:
            chosen.append((w, v))
            span = cand
        if span.basis == current.basis:
            break
    if span is None or span.basis != current.basis:
        raise LatticeNotFound("harvested words fail to generate their own lattice")

    return TranslationHarvest(pairs, chosen, current, radius_used)


class GeodesicSet:
    def __init__(self, target, length, count, words=None):
        self.target = target
        self.length = length
        self.count = count
        self.words = words


class TargetUnreachable(RuntimeError):
    pass


def geodesics(generators, target, cap, with_words=False, max_words=10000,
              max_elements=DEFAULT_MAX_ELEMENTS):
    """Count (and optionally list) the shortest words evaluating to target.

    Layered counting: the number of geodesics to h at distance r is the
    sum over predecessors g at distance r-1 with h = image(x) * g.
    """
    names, images = _symmetrize(generators)
    d = generators[0][1].dimension
    ident = AffineIsometry.identity(d)
    if not isinstance(target, AffineIsometry):
        target = AffineIsometry.from_translation([Fraction(t) for t in target])
    letters = []
    for k in range(1, len(names) + 1):
        letters.append(k)
        letters.append(-k)
    dist = {ident: 0}
    count = {ident: 1}
    prev_sphere = [ident]
    if target == ident:
        return GeodesicSet(target, 0, 1, [()] if with_words else None)
    for r in range(1, cap + 1):
        sphere = []
        for g in prev_sphere:
            for x in letters:
                h = images[x] * g
                if h in dist:
                    if dist[h] == r:
                        count[h] += count[g]
                    continue
                if len(dist) >= max_elements:
                    raise BallBoundExceeded(
                        f"ball exceeded {max_elements} elements at radius {r}"
                    )
                dist[h] = r
                count[h] = count[g]
                sphere.append(h)
        if target in dist:
            words = None
            if with_words:
                words = _enumerate_geodesics(
                    target, dist, images, letters, max_words
                )
            return GeodesicSet(target, r, count[target], words)
        prev_sphere = sphere
        if not sphere:
            break
    raise TargetUnreachable(f"target not reached within length cap {cap}")


def _enumerate_geodesics(target, dist, images, letters, max_words):
    out = []

    def back(h, suffix):
        if len(out) >= max_words:
            return
        r = dist[h]
        if r == 0:
            out.append(free_reduce(tuple(suffix)))
            return
        for x in letters:
            g = images[-x] * h
            if dist.get(g) == r - 1:
                back(g, [x] + suffix)

    back(target, [])
    return out


def lattice_geodesic_count(vector):
    """Monotone lattice paths from 0 to `vector` with unit steps.

    Independent oracle for geodesic counts on Z^d with the standard
    generators: dynamic programming, count(v) = sum_i count(v - sign(v_i) e_i).
    """
    vector = tuple(int(v) for v in vector)
    memo = {}

    def rec(v):
        if all(c == 0 for c in v):
            return 1
        if v in memo:
            return memo[v]
        total = 0
        for i, c in enumerate(v):
            if c:
                step = list(v)
                step[i] -= 1 if c > 0 else -1
                total += rec(tuple(step))
        memo[v] = total
        return total

    return rec(vector)


def odd_cycle_girth(generators, marked_name, cap=DEFAULT_RADIUS_CAP,
                    max_elements=DEFAULT_MAX_ELEMENTS):
    """Length of the shortest identity word using the marked generator
    an odd number of times, or None if none exists within the cap.

    BFS on (element, parity of marked-letter count).
    """
    names, images = _symmetrize(generators)
    try:
        marked = names.index(marked_name) + 1
    except ValueError:
        raise ValueError(f"unknown generator {marked_name!r}") from None
    d = generators[0][1].dimension
    ident = AffineIsometry.identity(d)
    letters = []
    for k in range(1, len(names) + 1):
        letters.append(k)
        letters.append(-k)
    start = (ident, 0)
    goal = (ident, 1)
    seen = {start}
    prev_sphere = [start]
    for r in range(1, cap + 1):
        sphere = []
        for g, par in prev_sphere:
            for x in letters:
                h = images[x] * g
                state = (h, par ^ (1 if abs(x) == marked else 0))
                if state in seen:
                    continue
                if len(seen) >= max_elements:
                    raise BallBoundExceeded(
                        f"search exceeded {max_elements} states at radius {r}"
                    )
                seen.add(state)
                if state == goal:
                    return r
                sphere.append(state)
        prev_sphere = sphere
        if not sphere:
            break
    return None
