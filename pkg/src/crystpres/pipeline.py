"""Assembly of short presentations for crystallographic groups.

Given a generating set of affine isometries the pipeline finds the
translation lattice and the point group, presents the point group on
the given generators, lifts its relators back to the full group,
adds lattice and conjugation relators, simplifies, and verifies the
result against finite quotients.
"""

from fractions import Fraction

from .affine import (
    AffineIsometry,
    TranslationLattice,
    finite_closure,
    inverse as affine_inverse,
    point_group_compose,
    point_group_image,
)
from .bfs import shortest_translation_words
from .cosets import (
    DEFAULT_MAX_COSETS,
    FiniteGroupModel,
    is_consequence,
    order_check,
    short_presentation_finite,
)
from .intmat import identity_matrix, left_kernel, mat_vec, solve_in_rowspan
from .symop import GeneratingSetDocument, format_symop
from .words import (
    Presentation,
    cyclic_reduce,
    evaluate,
    format_word,
    invert_word,
    relator_class_key,
    tietze_simplify,
    word_sort_key,
)


class PipelineError(RuntimeError):
    pass


class VerificationFailure(PipelineError):
    """A relator fails exact evaluation or a quotient order check.

    This signals an internal inconsistency or an incomplete lattice, not
    a property of the input, so it is an error rather than a warning.
    """


def _as_generator_list(generators):
    if isinstance(generators, GeneratingSetDocument):
        return list(generators.generators)
    return [(name, op) for name, op in generators]


class ExtensionData:
    """The lattice/point-group split of a crystallographic group.

    generators: list of (name, AffineIsometry), the X of the output
    presentation.  lattice_words: list of (word-in-X, vector) whose
    vectors generate the translation lattice (shortest first; may exceed
    the rank when no rank-sized subset of shortest words suffices).
    model: the point group as a finite group of lattice-coset
    representatives.  point_presentation: short presentation of the
    point group on the images of X.
    """

    def __init__(self, generators, harvest, model, point_presentation):
        self.generators = generators
        self.names = [name for name, _ in generators]
        self.assignment = {i + 1: op for i, (_, op) in enumerate(generators)}
        self.harvest = harvest
        self.lattice = harvest.lattice
        self.lattice_words = harvest.lattice_words
        self.model = model
        self.point_presentation = point_presentation

    @property
    def point_order(self):
        return self.model.order

    @property
    def rank(self):
        return self.lattice.rank


def build_extension_data(generators, rank=None, radius_cap=30,
                         closure_bound=10000):
    """Find the translation lattice and present the point group.

    `rank` fixes the expected lattice rank for subperiodic groups; by
    default full rank in the ambient dimension is required.
    """
    generators = _as_generator_list(generators)
    if not generators:
        raise PipelineError("empty generating set")
    harvest = shortest_translation_words(generators, rank=rank,
                                         radius_cap=radius_cap)
    lattice = harvest.lattice
    ops = [op for _, op in generators]
    elements = finite_closure(ops, lattice, bound=closure_bound)
    index = {e: i for i, e in enumerate(elements)}
    images = [index[point_group_image(op, lattice)] for op in ops]
    model = FiniteGroupModel(
        elements, images, lambda a, b: point_group_compose(a, b, lattice)
    )
    names = [name for name, _ in generators]
    point_pres = short_presentation_finite(model, names=names)
    return ExtensionData(generators, harvest, model, point_pres)


def _lattice_word_for(E, vector):
    """A word in X evaluating to the translation `vector`, via lattice words.

    Solves for integer coefficients over the harvested generating
    vectors; any block order works because the blocks are translations.
    """
    rows = [v for _, v in E.lattice_words]
    coeffs = solve_in_rowspan(rows, vector)
    if coeffs is None:
        raise PipelineError(
            f"translation {vector} is not in the harvested lattice"
        )
    # when the harvested words outnumber the rank the solution is only
    # unique modulo the kernel; descend along kernel directions to keep
    # the emitted word short
    kernel = left_kernel(rows)
    if kernel:
        lengths = [len(w) for w, _ in E.lattice_words]

        def cost(cs):
            return sum(abs(c) * n for c, n in zip(cs, lengths))

        coeffs = list(coeffs)
        improved = True
        while improved:
            improved = False
            for k in kernel:
                for sign in (1, -1):
                    while True:
                        trial = [c - sign * x for c, x in zip(coeffs, k)]
                        if cost(trial) < cost(coeffs):
                            coeffs = trial
                            improved = True
                        else:
                            break
        coeffs = tuple(coeffs)
    out = ()
    for c, (w, _) in zip(coeffs, E.lattice_words):
        if c > 0:
            out += w * c
        elif c < 0:
            out += invert_word(w) * (-c)
    return out


def lift_point_relators(E):
    """Step (c): cancel the residual translation of each point relator.

    Each point-group relator evaluates in the full group to a pure
    translation; the lifted relator divides it out by a lattice word.
    Returns (lifted word, point relator word, vector) triples.
    """
    ident = identity_matrix(E.lattice.dimension)
    out = []
    for r in E.point_presentation.relators:
        g = evaluate(r, E.assignment)
        if g.linear != ident:
            raise PipelineError(
                "point relator has non-identity linear part; model mismatch"
            )
        t = g.translation
        if all(x == 0 for x in t):
            out.append((r, r, t))
            continue
        w = _lattice_word_for(E, t)
        lifted = cyclic_reduce(r + invert_word(w))
        out.append((lifted, r, t))
    return out


def lattice_relators(E):
    """Step (b) relators: a presentation of the lattice on its words.

    Commutators of all pairs of lattice words plus one relator per
    integer dependence among their vectors (needed when more words than
    the rank were harvested).
    """
    words = [w for w, _ in E.lattice_words]
    vectors = [v for _, v in E.lattice_words]
    out = []
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            u, w = words[i], words[j]
            rel = cyclic_reduce(
                invert_word(u) + invert_word(w) + u + w
            )
            if rel:
                out.append(rel)
    for row in left_kernel(vectors):
        word = ()
        for c, w in zip(row, words):
            if c > 0:
                word += w * c
            elif c < 0:
                word += invert_word(w) * (-c)
        rel = cyclic_reduce(word)
        if rel:
            out.append(rel)
    return out


def conjugation_relators(E):
    """Step (d): how each generator conjugates each lattice word.

    x^-1 y x evaluates to the translation by (linear part of x) applied
    to the vector of y; the relator divides that out.  Freely trivial
    relators are dropped.
    """
    out = []
    for k in range(1, len(E.names) + 1):
        lin = E.assignment[k].linear
        for w, v in E.lattice_words:
            conj = tuple(mat_vec(lin, v))
            expr = _lattice_word_for(E, conj)
            rel = cyclic_reduce((-k,) + w + (k,) + invert_word(expr))
            if rel:
                out.append(rel)
    return out


def quotient_relators(E, m):
    """Extra relators presenting G/mT: m-th powers of the lattice words."""
    return [w * m for w, _ in E.lattice_words]


class PresentationReport:
    def __init__(self, presentation, provenance, verification, extension,
                 simplification_steps):
        self.presentation = presentation
        self.provenance = provenance
        self.verification = verification
        self.extension = extension
        self.simplification_steps = simplification_steps

    def to_dict(self):
        names = self.presentation.generator_names
        return {
            "generators": [
                {"name": n, "xyz": format_symop(op)}
                for n, op in self.extension.generators
            ],
            "point_group_order": self.extension.point_order,
            "lattice_rank": self.extension.rank,
            "lattice_basis": [
                [str(x) for x in row] for row in self.extension.lattice.basis
            ],
            "lattice_words": [
                {"word": format_word(w, names), "vector": [str(x) for x in v]}
                for w, v in self.extension.lattice_words
            ],
            "relators": [
                format_word(r, names) for r in self.presentation.relators
            ],
            "provenance": [
                {
                    "relator": format_word(r, names),
                    "step": tag[0],
                    "source": format_word(tag[1], names),
                }
                for r, tag in zip(self.presentation.relators, self.provenance)
            ],
            "verification": self.verification,
            "simplification_steps": self.simplification_steps,
        }


def present(generators, rank=None, simplify=True, prune=True,
            verify_orders=(2, 3), max_cosets=DEFAULT_MAX_COSETS,
            tietze_budget=10000):
    """Full pipeline: extension data, relators, simplification, checks.

    Every relator is checked to evaluate to the identity (always on).
    Quotient order checks enumerate G/mT for m in verify_orders and
    compare with |P| * m^rank.  `prune` removes relators that the order
    checks certify redundant in those quotients; the commutator and
    dependence relators of the lattice words are the usual casualties.
    """
    E = build_extension_data(generators, rank=rank)
    ident = AffineIsometry.identity(E.lattice.dimension)

    tagged = []
    for lifted, source, _ in lift_point_relators(E):
        tagged.append((lifted, ("lifted point relator", source)))
    for rel in lattice_relators(E):
        tagged.append((rel, ("lattice relator", rel)))
    for rel in conjugation_relators(E):
        tagged.append((rel, ("conjugation relator", rel)))

    for rel, tag in tagged:
        if not evaluate(rel, E.assignment) == ident:
            raise VerificationFailure(
                f"relator from {tag[0]} does not evaluate to the identity"
            )

    pres = Presentation(E.names, [r for r, _ in tagged])
    # Presentation dedups by cyclic class; rebuild the tag list to match
    tag_of = {}
    for r, t in tagged:
        tag_of.setdefault(relator_class_key(cyclic_reduce(r)), t)
    tags = [tag_of[relator_class_key(r)] for r in pres.relators]

    steps = 0
    if simplify:
        result = tietze_simplify(pres, budget=tietze_budget, tags=tags)
        pres, tags, steps = result.presentation, result.tags, result.steps

    # removal trials only need to distinguish pass from anything else, so
    # a tight coset bound keeps them cheap; overflow means "keep it"
    prune_cap = max(
        64 * max(
            (E.point_order * m ** E.rank for m in verify_orders), default=1
        ),
        2000,
    )

    def orders_ok(candidate):
        for m in sorted(verify_orders):
            expected = E.point_order * m ** E.rank
            extra = quotient_relators(E, m)
            verdict = order_check(candidate, extra, expected,
                                  min(prune_cap, max_cosets))
            if verdict != "pass":
                return verdict
        return "pass"

    if prune and verify_orders:
        # longest first, deterministic; keep a relator unless the
        # quotient checks still pass without it
        order_idx = sorted(
            range(len(pres.relators)),
            key=lambda i: word_sort_key(pres.relators[i]),
            reverse=True,
        )
        keep = list(range(len(pres.relators)))
        for i in order_idx:
            if len(keep) <= 1:
                break
            trial = [j for j in keep if j != i]
            candidate = pres.with_relators([pres.relators[j] for j in trial])
            if orders_ok(candidate) == "pass":
                keep = trial
        keep.sort()
        pres = pres.with_relators([pres.relators[j] for j in keep])
        tags = [tags[j] for j in keep]
        if simplify:
            result = tietze_simplify(pres, budget=tietze_budget, tags=tags)
            pres, tags = result.presentation, result.tags
            steps += result.steps

    verification = {"identity_checks": len(tagged), "order_checks": {}}
    for rel in pres.relators:
        if not evaluate(rel, E.assignment) == ident:
            raise VerificationFailure(
                "simplified relator does not evaluate to the identity"
            )
    final_verdict = "pass"
    for m in verify_orders:
        expected = E.point_order * m ** E.rank
        verdict = order_check(pres, quotient_relators(E, m), expected,
                              max_cosets)
        verification["order_checks"][str(m)] = {
            "expected": expected,
            "verdict": verdict,
        }
        if verdict == "fail":
            final_verdict = "fail"
        elif verdict == "inconclusive" and final_verdict == "pass":
            final_verdict = "inconclusive"
    verification["verdict"] = final_verdict
    if final_verdict == "fail":
        raise VerificationFailure(
            "quotient order check failed for the final presentation"
        )

    return PresentationReport(pres, tags, verification, E, steps)


class RingCensusEntry:
    def __init__(self, relator, cycle_length, stabilizer_order,
                 rings_per_vertex, cycles_per_cell):
        self.relator = relator
        self.cycle_length = cycle_length
        self.stabilizer_order = stabilizer_order
        self.rings_per_vertex = rings_per_vertex
        self.cycles_per_cell = cycles_per_cell


def bounded_consequence_check(report, word, ms=(2, 3),
                              max_cosets=DEFAULT_MAX_COSETS):
    """Bounded test that a word is a consequence of a pipeline output.

    A consequence must evaluate to the identity isometry exactly and
    must be trivial in every finite quotient G/mT enumerated from the
    emitted relators.  Returns "pass" (all bounded witnesses found),
    "fail" (a witness refutes it), or "inconclusive" (some enumeration
    overflowed).
    """
    E = report.extension
    p = report.presentation
    if not evaluate(word, E.assignment).is_identity():
        return "fail"
    verdict = "pass"
    for m in ms:
        q = Presentation(
            p.generator_names, list(p.relators) + quotient_relators(E, m)
        )
        res = is_consequence(q, word, max_cosets=max_cosets)
        if res is False:
            return "fail"
        if res is None:
            verdict = "inconclusive"
    return verdict


def relator_ring_census(p, generators, cell_order):
    """Rings per vertex contributed by each relator cycle.

    Walking a relator from the identity traces a closed cycle in the
    Cayley graph; its setwise stabilizer under the right regular action
    has order s dividing the cycle length c, the cycle orbit contributes
    cell_order / s cycles per conventional cell, and with one vertex per
    group element that is c / s rings per vertex.  `cell_order` is the
    number of group elements per conventional cell (point order times
    the centering index).
    """
    generators = _as_generator_list(generators)
    assignment = {i + 1: op for i, (_, op) in enumerate(generators)}
    out = []
    for r in p.relators:
        c = len(r)
        if c < 3:
            raise PipelineError("ring census needs relators of length >= 3")
        verts = []
        cur = AffineIsometry.identity(generators[0][1].dimension)
        for x in r:
            verts.append(cur)
            g = assignment[abs(x)]
            if x < 0:
                g = affine_inverse(g)
            cur = g * cur
        if not cur.is_identity():
            raise PipelineError("relator does not close a cycle")
        vset = set(verts)
        if len(vset) != c:
            raise PipelineError(
                f"relator cycle revisits a vertex (length {c}, "
                f"{len(vset)} distinct)"
            )
        stab = 0
        for f in verts:
            if {v * f for v in verts} == vset:
                stab += 1
        if c % stab != 0 or cell_order % stab != 0:
            raise PipelineError("stabilizer order does not divide cycle data")
        out.append(RingCensusEntry(r, c, stab, c // stab, cell_order // stab))
    return out


def ndia_generators(n):
    """Inversion generating set of the n-dimensional diamond net group.

    n+1 point inversions: through the origin, through the midpoints of
    the first n-1 basis vectors raised to half, and through half the
    all-ones vector.  Generator names run a, b, c, d, f, ... (no e).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    letters = [ch for ch in "abcdfghijklmnopqrstuvwxyz"]
    if n + 1 > len(letters):
        raise ValueError("n too large for the naming scheme")
    neg = tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))
    points = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n - 1):
        points.append(tuple(
            Fraction(1, 2) if j == i else Fraction(0) for j in range(n)
        ))
    points.append(tuple(Fraction(1, 2) for _ in range(n)))
    gens = []
    for name, p in zip(letters, points):
        translation = tuple(2 * x for x in p)
        gens.append((name, AffineIsometry(neg, translation)))
    return GeneratingSetDocument(n, gens, label=f"{n}-dia inversions")
