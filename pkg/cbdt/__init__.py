from .api import Api, api
from .common import (
    CaseMemoryError,
    CbdtError,
    DecisionError,
    DistanceError,
    DocumentError,
    FeatureSpaceError,
    LearningError,
)
from .decision import (
    RawQuery,
    UtilityFunction,
    decide,
    decide_restricted,
    evolve_then_decide,
)
from .featurespace import (
    Feature,
    FeatureSpace,
    Problem,
    SubspaceSelector,
    extend_with_feature,
    extend_with_value,
    project,
    rank_of,
)
from .learning import (
    RateModel,
    WaitScenario,
    estimate_rates,
    evaluate_wait,
    event_probability,
    learn_rates,
    poisson_pmf,
)
from .memory import Case, Memory, load_memory, save_memory
from .similarity import (
    diameter,
    lattice_distance,
    matrix_power_distance,
    pairwise_similarity,
    similarity,
)

__version__ = "0.1.0"
