"""Computable simple games at desk scale.

Finite games are explicit winning families over a bounded universe; infinite
games are prefix classifiers of membership strings. The package classifies
games by the four conventional axioms, computes Nakamura numbers exactly
(finite) or by bounded witnesses (prefix), verifies the core-existence
threshold over preference profiles, and builds the catalog constructions:
partition games, products over pairings, effectivity-derived games, and the
diagonal infinite game.
"""

from .aggregation import (
    CoreCheck,
    Profile,
    StandingAssumptionError,
    all_acyclic_relations,
    all_linear_orders,
    core,
    dominance,
    is_acyclic,
    linear_order,
    verify_core_threshold,
)
from .axioms import (
    IMPOSSIBLE_TYPES,
    AxiomWitness,
    EmptyGameError,
    TypeSignature,
    classify,
    exhaustive_census,
    is_dictatorial,
    minimal_carrier,
    veto_players,
)
from .bitstrings import (
    complement,
    incompatible,
    is_initial_segment,
    ones_coalition,
    ones_mask,
)
from .coalitions import MAX_UNIVERSE, Coalition
from .constructions import (
    Pairing,
    build,
    dictator,
    disjoint_image,
    even_odd_pairing,
    example_type13,
    example_type15,
    example_type9,
    majority,
    partition_type11,
    partition_type3,
    product,
    shift_pairing,
    type11_k2,
    unanimity,
    veto_free_rule,
)
from .diagonal import (
    Decision,
    DeterminingTables,
    IndexOracle,
    decide_string,
    determining_tables,
    diagonal_game,
    dodging_prefix,
)
from .effectivity import (
    GameForm,
    alpha_effective,
    derive_alpha_game,
    derive_exact_game,
    exactly_effective,
    veto_free_form,
)
from .games import (
    Determination,
    FiniteGame,
    MembershipStream,
    PrefixGame,
    Verdict,
    eval_stream,
    extend_universe,
    finite_as_prefix,
    monotone_closure,
)
from .nakamura import (
    INFINITE,
    NakamuraConstraint,
    NakamuraResult,
    SignatureContradiction,
    bounded_nakamura_witness,
    nakamura_number,
    signature_constraints,
)
from .report import TableReport, run_table_report

__all__ = [
    "AxiomWitness",
    "Coalition",
    "CoreCheck",
    "Decision",
    "Determination",
    "DeterminingTables",
    "EmptyGameError",
    "FiniteGame",
    "GameForm",
    "IMPOSSIBLE_TYPES",
    "INFINITE",
    "IndexOracle",
    "MAX_UNIVERSE",
    "MembershipStream",
    "NakamuraConstraint",
    "NakamuraResult",
    "Pairing",
    "PrefixGame",
    "Profile",
    "SignatureContradiction",
    "StandingAssumptionError",
    "TableReport",
    "TypeSignature",
    "Verdict",
    "all_acyclic_relations",
    "all_linear_orders",
    "alpha_effective",
    "bounded_nakamura_witness",
    "build",
    "classify",
    "complement",
    "core",
    "decide_string",
    "derive_alpha_game",
    "derive_exact_game",
    "determining_tables",
    "diagonal_game",
    "dictator",
    "disjoint_image",
    "dodging_prefix",
    "dominance",
    "eval_stream",
    "even_odd_pairing",
    "exactly_effective",
    "example_type13",
    "example_type15",
    "example_type9",
    "exhaustive_census",
    "extend_universe",
    "finite_as_prefix",
    "incompatible",
    "is_acyclic",
    "is_dictatorial",
    "is_initial_segment",
    "linear_order",
    "majority",
    "minimal_carrier",
    "monotone_closure",
    "nakamura_number",
    "ones_coalition",
    "ones_mask",
    "partition_type11",
    "partition_type3",
    "product",
    "run_table_report",
    "shift_pairing",
    "signature_constraints",
    "type11_k2",
    "unanimity",
    "verify_core_threshold",
    "veto_free_form",
    "veto_free_rule",
    "veto_players",
]
