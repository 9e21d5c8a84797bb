"""Multi-pattern operads, bud generating systems and score rendering."""

from .budgen import (
    BudGeneratingSystem,
    ColoredStep,
    FullStep,
    GenerationTrace,
    Mode,
    PartialStep,
    RandomSource,
    Rule,
    example_system,
    generate,
    generate_colored,
    generate_full,
    generate_partial,
    replay,
)
from .colored import (
    ColoredMultiPattern,
    bud_compose,
    bud_full_compose,
    colored_compose,
    colored_unit,
    pruning,
)
from .errors import (
    ColorError,
    DimensionError,
    MusicBoxError,
    ParameterError,
    ParseError,
    PositionError,
    StructureError,
    UnknownColorError,
    UnsupportedTemperamentError,
    ValidationError,
)
from .patterns import (
    DP_UNIT,
    P_UNIT,
    RP_UNIT,
    DegreePattern,
    MorphismParams,
    MultiPattern,
    Pattern,
    RhythmPattern,
    dp_compose,
    duration_sequence,
    full_compose,
    mirror,
    mp_compose,
    mp_unit,
    parse_multipattern,
    pattern_compose,
    phi,
    rhythm_from_durations,
    rp_compose,
)
from .render import (
    BUILTIN_SCALES,
    Event,
    Note,
    Phrase,
    RootedScale,
    Scale,
    Tempo,
    render,
    scale_note,
    to_abc,
    to_json_events,
)
from .trees import LEAF, Node, decompose, eval_tree, format_tree, parse_tree
from .variations import (
    Kind,
    VariationSpec,
    build_arpeggiator,
    build_harmonizator,
    build_rhythmic,
    build_temporizator,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_SCALES",
    "BudGeneratingSystem",
    "ColorError",
    "ColoredMultiPattern",
    "ColoredStep",
    "DP_UNIT",
    "DegreePattern",
    "DimensionError",
    "Event",
    "FullStep",
    "GenerationTrace",
    "Kind",
    "LEAF",
    "Mode",
    "MorphismParams",
    "MultiPattern",
    "MusicBoxError",
    "Node",
    "Note",
    "P_UNIT",
    "ParameterError",
    "ParseError",
    "PartialStep",
    "Pattern",
    "Phrase",
    "PositionError",
    "RP_UNIT",
    "RandomSource",
    "RhythmPattern",
    "RootedScale",
    "Rule",
    "Scale",
    "StructureError",
    "Tempo",
    "UnknownColorError",
    "UnsupportedTemperamentError",
    "ValidationError",
    "VariationSpec",
    "bud_compose",
    "bud_full_compose",
    "build_arpeggiator",
    "build_harmonizator",
    "build_rhythmic",
    "build_temporizator",
    "colored_compose",
    "colored_unit",
    "decompose",
    "dp_compose",
    "duration_sequence",
    "eval_tree",
    "example_system",
    "format_tree",
    "full_compose",
    "generate",
    "generate_colored",
    "generate_full",
    "generate_partial",
    "mirror",
    "mp_compose",
    "mp_unit",
    "parse_multipattern",
    "parse_tree",
    "pattern_compose",
    "phi",
    "pruning",
    "render",
    "replay",
    "rhythm_from_durations",
    "rp_compose",
    "scale_note",
    "to_abc",
    "to_json_events",
]
