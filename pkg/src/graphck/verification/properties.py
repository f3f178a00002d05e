# --------------------------------------------------------------------------------------
# This code is part of graphck.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
# --------------------------------------------------------------------------------------
"""Registry of the properties checked by the verification suite.

A property couples a seeded case generator with a pure check. Cases are
JSON objects, so that a failing case can be stored in a witness file and
checked again without the generator.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..algebra import (
    DiagElement,
    Scalar,
    TckElement,
    atom_values,
    ck4_product,
    ck_element,
    cycle_lemma_check,
    diag_norm_ap,
    diag_norm_free,
    expectation,
    orthogonalize,
)
from ..graph import (
    Graph,
    Path,
    aperiodic_tail,
    check_condition_L,
    comparable,
    exhaustive_oracle,
    is_exhaustive,
    paths_from,
    witness_prefix,
)
from ..representation import (
    Family,
    boundary_points,
    build_basis,
    comparison_horizon,
    expectation_numeric,
    op_norm,
    represent,
)
from .sampling import (
    decode_path_set,
    encode_path_set,
    random_diag_element,
    random_path,
    random_path_set,
    random_tck_element,
)
from .suite_config import SuiteConfig

NUMERIC_TOLERANCE = 1e-9
ENTRY_TOLERANCE = 1e-12
MONOTONE_TOLERANCE = 1e-10
PSD_TOLERANCE = 1e-10

CaseGenerator = Callable[[SuiteConfig, np.random.Generator], Iterator[dict]]
Check = Callable[[SuiteConfig, dict], None]


class PropertyFailure(Exception):
    """Raised by a check when its case violates the property."""


@dataclass(frozen=True)
class Property:
    """A named property with its case generator and check.

    Attributes:
        - name (str): Registry key, also used on the command line.
        - summary (str): One-line statement of the property.
        - cases (CaseGenerator): Seeded generator of JSON cases.
        - check (Check): Pure check raising PropertyFailure on violation.
        - requires_condition_L (bool): Skip the property when a cycle has
          no entrance.

    """

    name: str
    summary: str
    cases: CaseGenerator
    check: Check
    requires_condition_L: bool = False


PROPERTIES: dict[str, Property] = {}


def register(name: str, summary: str, cases: CaseGenerator, requires_condition_L=False):
    """Register the decorated check under ``name``."""

    def decorator(check: Check) -> Check:
        PROPERTIES[name] = Property(name, summary, cases, check, requires_condition_L)
        return check

    return decorator


def _expect(condition: bool, message: str):
    if not condition:
        raise PropertyFailure(message)


def _trials(cfg: SuiteConfig) -> range:
    return range(cfg.trials)


def _fmt(graph: Graph, path: Path) -> str:
    return graph.format_path(path)


def _element(cfg: SuiteConfig, case: dict, key: str = "x") -> TckElement:
    return TckElement.from_dict(cfg.graph, case[key])


def _diag(cfg: SuiteConfig, case: dict) -> DiagElement:
    graph = cfg.graph
    return DiagElement.from_pairs(
        (graph.parse_path(t["path"]), _scalar(t)) for t in case["a"]
    )


def _scalar(record: dict) -> Scalar:
    return Scalar(Fraction(record["re"]), Fraction(record["im"]))


def _tck_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        x = random_tck_element(cfg.graph, rng, cfg.max_path_length)
        yield {"x": x.to_dict(cfg.graph)}


def _diag_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        a = random_diag_element(cfg.graph, rng, cfg.max_path_length)
        yield {"a": a.to_dict(cfg.graph)}


def _path_set_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        path_set = random_path_set(cfg.graph, rng, cfg.max_path_length)
        yield {"F": encode_path_set(cfg.graph, path_set)}


# graph layer


def _enumeration_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for v in cfg.graph.vertices:
        for n in range(min(cfg.depth, 6) + 1):
            yield {"vertex": v, "length": n}


@register(
    "paths-enumeration",
    "paths_from agrees with the n-fold product of the edge set",
    _enumeration_cases,
)
def check_paths_enumeration(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    v, n = case["vertex"], case["length"]
    walks: list[tuple[tuple[str, ...], str]] = [((), v)]
    for _ in range(n):
        walks = [
            (ids + (e.id,), e.source)
            for ids, end in walks
            for e in graph.edges.values()
            if e.range == end
        ]
    expected = sorted(ids for ids, _ in walks)
    found = paths_from(graph, v, n)
    _expect(
        [p.edges for p in found] == expected,
        f"paths_from({v}, {n}) returned {[str(p) for p in found]}, expected {expected}",
    )
    for path in found:
        _expect(graph.path(path.edges, base=v) == path, f"{path} is not composable")


def _single_case(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    yield {}


def _simple_cycles_by_definition(graph: Graph) -> list[Path]:
    cycles = []

    def extend(path: Path):
        for edge in graph.range_edges(path.source):
            if edge.source == path.range:
                cycles.append(graph.path(path.edges + (edge.id,)))
            elif edge.source not in path.vertices:
                extend(graph.path(path.edges + (edge.id,)))

    for v in graph.vertices:
        extend(graph.vertex_path(v))
    return cycles


def _has_entrance_by_definition(graph: Graph, cycle: Path) -> bool:
    on_cycle = set(cycle.edges)
    return any(
        graph.is_infinite_emitter(v)
        or any(g.id not in on_cycle for g in graph.range_edges(v))
        for v in cycle.vertices[:-1]
    )


@register(
    "condition-L-oracle",
    "check_condition_L agrees with an entrance test on every simple cycle",
    _single_case,
)
def check_condition_L_oracle(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    cycles = _simple_cycles_by_definition(graph)
    holds = all(_has_entrance_by_definition(graph, c) for c in cycles)
    verdict = check_condition_L(graph)
    _expect(verdict.holds == holds, f"check_condition_L says {verdict.holds}, oracle {holds}")
    if not verdict.holds:
        _expect(
            not _has_entrance_by_definition(graph, verdict.witness.path),
            f"Witness cycle {verdict.witness} has an entrance",
        )


def _tail_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        v = cfg.graph.vertices[rng.integers(len(cfg.graph.vertices))]
        yield {"vertex": v, "bound": int(rng.integers(cfg.depth + 1))}


@register(
    "aperiodic-tail",
    "aperiodic_tail ends at a singular vertex or exceeds the bound with a fresh last edge",
    _tail_cases,
    requires_condition_L=True,
)
def check_aperiodic_tail(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    tau = aperiodic_tail(graph, case["vertex"], case["bound"])
    _expect(tau.range == case["vertex"], f"Tail {tau} does not start at {case['vertex']}")
    singular = not graph.range_edges(tau.source) or graph.is_infinite_emitter(tau.source)
    fresh = len(tau) > case["bound"] and tau.edges[-1] not in tau.edges[:-1]
    _expect(singular or fresh, f"Tail {tau} satisfies neither clause")


def _witness_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        v = cfg.graph.vertices[rng.integers(len(cfg.graph.vertices))]
        m, n = sorted(int(k) for k in rng.integers(4 * cfg.depth + 1, size=2))
        yield {"vertex": v, "m": m, "n": n}


@register(
    "witness-prefix",
    "witness_prefix returns nested prefixes of one boundary path",
    _witness_cases,
    requires_condition_L=True,
)
def check_witness_prefix(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    short = witness_prefix(graph, case["vertex"], case["m"])
    long = witness_prefix(graph, case["vertex"], case["n"])
    _expect(short.is_prefix_of(long), f"{short} is not a prefix of {long}")
    if len(long) < case["n"]:
        _expect(
            graph.is_terminal(long.source) or graph.is_infinite_emitter(long.source),
            f"Witness {long} stops early at {long.source}",
        )


@register(
    "exhaustive-oracle",
    "is_exhaustive agrees with brute force and returns a sound witness",
    _path_set_cases,
)
def check_exhaustive_oracle(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    path_set = decode_path_set(graph, case["F"])
    verdict = is_exhaustive(graph, path_set)
    oracle = exhaustive_oracle(graph, path_set, path_set.max_length)
    _expect(verdict.exhaustive == oracle, f"is_exhaustive={verdict.exhaustive}, oracle={oracle}")
    if verdict.exhaustive:
        return
    witness = verdict.witness
    if verdict.through_phantom:
        _expect(
            graph.is_infinite_emitter(witness.source)
            and not any(m.is_prefix_of(witness) for m in path_set.members),
            f"Phantom witness {witness} is covered or not at an infinite emitter",
        )
    else:
        _expect(
            not any(comparable(witness, m) for m in path_set.members),
            f"Witness {witness} is comparable with a member",
        )


def _monotone_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    graph = cfg.graph
    for _ in _trials(cfg):
        path_set = random_path_set(graph, rng, cfg.max_path_length)
        extra = random_path(graph, rng, cfg.max_path_length, base=path_set.base)
        members = path_set.sorted()
        alpha = members[rng.integers(len(members))]
        beta = random_path(graph, rng, cfg.max_path_length, base=alpha.source)
        yield {
            "F": encode_path_set(graph, path_set),
            "extra": _fmt(graph, extra),
            "extension": _fmt(graph, alpha.concat(beta)),
        }


@register(
    "exhaustive-monotone",
    "supersets of exhaustive sets are exhaustive; extending a member keeps the verdict",
    _monotone_cases,
)
def check_exhaustive_monotone(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    path_set = decode_path_set(graph, case["F"])
    exhaustive = is_exhaustive(graph, path_set).exhaustive
    larger = decode_path_set(
        graph, {**case["F"], "members": case["F"]["members"] + [case["extra"]]}
    )
    if exhaustive:
        _expect(
            is_exhaustive(graph, larger).exhaustive,
            f"Adding {case['extra']} broke exhaustiveness",
        )
    absorbed = decode_path_set(
        graph, {**case["F"], "members": case["F"]["members"] + [case["extension"]]}
    )
    _expect(
        is_exhaustive(graph, absorbed).exhaustive == exhaustive,
        f"Adding the extension {case['extension']} changed the verdict",
    )


# diagonal calculus


@register(
    "orthogonalization",
    "atoms are orthogonal projections summing to each p_mu",
    _path_set_cases,
)
def check_orthogonalization(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    path_set = decode_path_set(graph, case["F"])
    try:
        decomposition = orthogonalize(graph, path_set)
    except RuntimeError as err:
        raise PropertyFailure(str(err)) from err
    for atom in decomposition:
        flag = not is_exhaustive(graph, path_set.tail_set(atom.path)).exhaustive
        _expect(atom.nonzero_in_ap == flag, f"Atom {atom.path} has a wrong survival flag")


def _triple_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    graph = cfg.graph
    for _ in _trials(cfg):
        base = graph.vertices[rng.integers(len(graph.vertices))]
        yield {
            "paths": [
                _fmt(graph, random_path(graph, rng, cfg.max_path_length + 1, base=base))
                for _ in range(3)
            ]
        }


@register(
    "diag-product-laws",
    "the boolean product of projections is associative, commutative and idempotent",
    _triple_cases,
)
def check_diag_product_laws(cfg: SuiteConfig, case: dict):
    a, b, c = (DiagElement.projection(cfg.graph.parse_path(p)) for p in case["paths"])
    _expect((a * b) * c == a * (b * c), "Product is not associative")
    _expect(a * b == b * a, "Product is not commutative")
    _expect(a * a == a, "Projection is not idempotent")


def _ck4_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    graph = cfg.graph
    for _ in _trials(cfg):
        lam = random_path(graph, rng, cfg.max_path_length)
        path_set = random_path_set(graph, rng, cfg.max_path_length, base=lam.source)
        yield {"lambda": _fmt(graph, lam), "M": encode_path_set(graph, path_set)}


@register(
    "faux-ck4",
    "the CK4 product vanishes on the boundary iff its path set is exhaustive",
    _ck4_cases,
    requires_condition_L=True,
)
def check_faux_ck4(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    lam = graph.parse_path(case["lambda"])
    path_set = decode_path_set(graph, case["M"])
    product = ck4_product(graph, lam, path_set)
    exhaustive = is_exhaustive(graph, path_set).exhaustive
    norm2, _ = diag_norm_ap(graph, product)
    _expect((norm2 == 0) == exhaustive, f"Norm^2 {norm2} but exhaustive={exhaustive}")
    element = TckElement.from_diagonal(product)
    basis = build_basis(graph, Family.BOUNDARY, max(cfg.depth, element.max_length))
    zero = represent(graph, element, basis).is_zero(NUMERIC_TOLERANCE)
    _expect(zero == exhaustive, f"Boundary matrix zero={zero} but exhaustive={exhaustive}")


@register(
    "diag-norm-contractive",
    "the aperiodic diagonal norm is at most the free boolean norm",
    _diag_cases,
    requires_condition_L=True,
)
def check_diag_norm_contractive(cfg: SuiteConfig, case: dict):
    a = _diag(cfg, case)
    ap, _ = diag_norm_ap(cfg.graph, a)
    free, _ = diag_norm_free(cfg.graph, a)
    _expect(ap <= free, f"Aperiodic norm^2 {ap} exceeds free norm^2 {free}")


@register(
    "diag-norm-numeric",
    "the exact aperiodic diagonal norm equals the boundary matrix norm",
    _diag_cases,
    requires_condition_L=True,
)
def check_diag_norm_numeric(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    a = _diag(cfg, case)
    _, exact = diag_norm_ap(graph, a)
    element = TckElement.from_diagonal(a)
    basis = build_basis(graph, Family.BOUNDARY, max(cfg.depth, element.max_length))
    numeric = op_norm(represent(graph, element, basis))
    _expect(abs(numeric - exact) <= NUMERIC_TOLERANCE, f"Exact {exact}, numeric {numeric}")


# symbolic span


def _tck_triple_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    for _ in _trials(cfg):
        yield {
            key: random_tck_element(cfg.graph, rng, cfg.max_path_length).to_dict(cfg.graph)
            for key in ("x", "y", "z")
        }


@register(
    "tck-product-laws",
    "the product is associative and the adjoint is an involutive anti-automorphism",
    _tck_triple_cases,
)
def check_tck_product_laws(cfg: SuiteConfig, case: dict):
    x, y, z = (_element(cfg, case, key) for key in ("x", "y", "z"))
    _expect((x * y) * z == x * (y * z), "Product is not associative")
    _expect((x * y).adjoint() == y.adjoint() * x.adjoint(), "(xy)* differs from y*x*")
    _expect(x.adjoint().adjoint() == x, "Adjoint is not an involution")


@register(
    "expectation-positive",
    "Phi(x*x) is nonnegative on every atom and Phi is idempotent",
    _tck_cases,
)
def check_expectation_positive(cfg: SuiteConfig, case: dict):
    x = _element(cfg, case)
    diagonal = expectation(x.adjoint() * x)
    for value in atom_values(cfg.graph, diagonal):
        _expect(
            value.value.im == 0 and value.value.re >= 0,
            f"Phi(x*x) takes the value {value.value} on the atom {value.path}",
        )
    phi = expectation(x)
    _expect(expectation(TckElement.from_diagonal(phi)) == phi, "Phi is not idempotent")


@register(
    "expectation-contractive",
    "the numeric expectation does not increase compression norms",
    _tck_cases,
)
def check_expectation_contractive(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    x = _element(cfg, case)
    families = [Family.TOEPLITZ]
    if check_condition_L(graph).holds:
        families.append(Family.BOUNDARY)
    for family in families:
        matrix = represent(graph, x, build_basis(graph, family, cfg.depth))
        reduced = op_norm(expectation_numeric(matrix))
        full = op_norm(matrix)
        _expect(
            reduced <= full + NUMERIC_TOLERANCE,
            f"{family.value}: |Phi(x)| = {reduced} exceeds |x| = {full}",
        )


def _cycle_lemma_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    graph = cfg.graph
    produced = 0
    while produced < cfg.trials:
        lam = random_path(graph, rng, cfg.max_path_length + 1)
        if len(lam) == 0:
            if not graph.edges:
                return
            continue
        nu = (
            lam.prefix(int(rng.integers(1, len(lam) + 1)))
            if rng.random() < 0.5
            else random_path(graph, rng, len(lam))
        )
        mu = (
            nu.prefix(int(rng.integers(len(nu) + 1)))
            if rng.random() < 0.5
            else random_path(graph, rng, len(nu))
        )
        if not len(lam) >= len(nu) > len(mu):
            continue
        produced += 1
        yield {"lambda": _fmt(graph, lam), "mu": _fmt(graph, mu), "nu": _fmt(graph, nu)}


@register(
    "cycle-lemma",
    "every nonzero sandwich t_l t_l* t_m t_n* t_l t_l* is t_l t_(l rho)* for a cycle rho",
    _cycle_lemma_cases,
)
def check_cycle_lemma(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    lam, mu, nu = (graph.parse_path(case[k]) for k in ("lambda", "mu", "nu"))
    try:
        result = cycle_lemma_check(graph, lam, mu, nu)
    except RuntimeError as err:
        raise PropertyFailure(str(err)) from err
    if not result.zero:
        expected = TckElement.term(lam, lam.concat(result.rho.path))
        _expect(result.sandwich == expected, f"Sandwich {result.sandwich} != {expected}")


def _pair_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    produced = 0
    while produced < cfg.trials:
        x = random_tck_element(cfg.graph, rng, cfg.max_path_length)
        y = random_tck_element(cfg.graph, rng, cfg.max_path_length)
        if x == y:
            continue
        produced += 1
        yield {"x": x.to_dict(cfg.graph), "y": y.to_dict(cfg.graph)}


@register(
    "linear-independence",
    "distinct canonical elements have distinct Toeplitz matrices",
    _pair_cases,
)
def check_linear_independence(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    difference = _element(cfg, case, "x") - _element(cfg, case, "y")
    basis = build_basis(graph, Family.TOEPLITZ, max(cfg.depth, difference.max_length))
    _expect(
        not represent(graph, difference, basis).is_zero(ENTRY_TOLERANCE),
        "Distinct elements share their Toeplitz matrix",
    )


# matrix models


@register(
    "expectation-compatibility",
    "the symbolic and numeric expectations agree on the boundary model",
    _tck_cases,
    requires_condition_L=True,
)
def check_expectation_compatibility(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    x = _element(cfg, case)
    basis = build_basis(graph, Family.BOUNDARY, cfg.depth)
    numeric = expectation_numeric(represent(graph, x, basis))
    symbolic = represent(graph, TckElement.from_diagonal(expectation(x)), basis)
    gap = float(np.max(np.abs(numeric.entries - symbolic.entries), initial=0.0))
    _expect(gap <= ENTRY_TOLERANCE, f"Expectations differ by {gap}")


def finite_point_depth(graph: Graph, depth: int) -> int:
    """Length of the longest finite boundary path of the depth-``depth`` basis."""
    basis = build_basis(graph, Family.BOUNDARY, depth)
    points = boundary_points(graph, basis, comparison_horizon(graph, depth, 0))
    return max(
        (
            len(p)
            for p in points
            if graph.is_terminal(p.source) or graph.is_infinite_emitter(p.source)
        ),
        default=0,
    )


@register(
    "co-universal",
    "boundary compression norms are bounded by Toeplitz compression norms",
    _tck_cases,
    requires_condition_L=True,
)
def check_co_universal(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    x = _element(cfg, case)
    boundary = op_norm(represent(graph, x, build_basis(graph, Family.BOUNDARY, cfg.depth)))
    # boundary labels stand for points reaching past the depth by up to |x| edges
    toeplitz_depth = max(cfg.depth, finite_point_depth(graph, cfg.depth)) + x.max_length
    toeplitz = op_norm(
        represent(graph, x, build_basis(graph, Family.TOEPLITZ, toeplitz_depth))
    )
    _expect(boundary <= toeplitz + 1e-8, f"Boundary norm {boundary} > Toeplitz {toeplitz}")


@register(
    "monotone-compression",
    "compression norms are nondecreasing in the depth",
    _tck_cases,
)
def check_monotone_compression(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    x = _element(cfg, case)
    families = [Family.TOEPLITZ]
    if check_condition_L(graph).holds:
        families.append(Family.BOUNDARY)
    for family in families:
        norms = [
            op_norm(represent(graph, x, build_basis(graph, family, d)))
            for d in range(max(x.max_length, 1), cfg.depth + 1)
        ]
        for d, (low, high) in enumerate(zip(norms, norms[1:], strict=False)):
            _expect(
                high >= low - MONOTONE_TOLERANCE,
                f"{family.value}: norm drops from {low} to {high} at step {d}",
            )


@register(
    "ck-condition-a",
    "products of q_v - t_l t_l* over a finite set vanish on the boundary iff it is exhaustive",
    _path_set_cases,
    requires_condition_L=True,
)
def check_ck_condition_a(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    path_set = decode_path_set(graph, case["F"])
    q_v = TckElement.vertex(graph, path_set.base)
    product = q_v
    for lam in path_set.sorted():
        product = product * (q_v - TckElement.range_projection(lam))
    basis = build_basis(graph, Family.BOUNDARY, max(cfg.depth, product.max_length))
    zero = represent(graph, product, basis).is_zero(NUMERIC_TOLERANCE)
    exhaustive = is_exhaustive(graph, path_set).exhaustive
    _expect(zero == exhaustive, f"Boundary product zero={zero}, exhaustive={exhaustive}")


def _family_cases(cfg: SuiteConfig, rng: np.random.Generator) -> Iterator[dict]:
    yield {"family": Family.TOEPLITZ.value}
    if check_condition_L(cfg.graph).holds:
        yield {"family": Family.BOUNDARY.value}


@register(
    "tck-relations",
    "the truncated families satisfy the Toeplitz-Cuntz-Krieger relations",
    _family_cases,
)
def check_tck_relations(cfg: SuiteConfig, case: dict):
    graph = cfg.graph
    family = Family(case["family"])
    basis = build_basis(graph, family, cfg.depth)
    q = {v: represent(graph, TckElement.vertex(graph, v), basis) for v in graph.vertices}
    for v in graph.vertices:
        for w in graph.vertices:
            product = q[v] @ q[w]
            if v == w:
                _expect((product - q[v]).is_zero(), f"q_{v} is not idempotent")
            else:
                _expect(product.is_zero(), f"q_{v} q_{w} is not zero")
    t = {
        e.id: represent(graph, TckElement.partial_isometry(graph.path([e.id])), basis)
        for e in graph.edges.values()
    }
    for edge in graph.edges.values():
        gram = (t[edge.id].adjoint() @ t[edge.id]).entries
        # columns whose image under t_e stays inside the truncation
        columns = [i for i in range(len(basis)) if np.any(t[edge.id].entries[:, i])]
        _expect(
            np.allclose(
                gram[:, columns], q[edge.source].entries[:, columns], atol=PSD_TOLERANCE
            ),
            f"t_{edge.id}* t_{edge.id} differs from q_{edge.source}",
        )
    for v in graph.vertices:
        gap = q[v]
        for e in graph.range_edges(v):
            gap = gap - t[e.id] @ t[e.id].adjoint()
        lowest = float(np.min(np.linalg.eigvalsh(gap.entries), initial=0.0))
        _expect(lowest >= -PSD_TOLERANCE, f"q_{v} - sum t_e t_e* has eigenvalue {lowest}")
        ck = represent(graph, ck_element(graph, v), basis).entries
        _expect(
            float(np.min(np.linalg.eigvalsh(ck), initial=0.0)) >= -PSD_TOLERANCE,
            f"Compression of q_{v} - sum t_e t_e* is not positive",
        )

