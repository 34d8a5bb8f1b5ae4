import structlog

from simplicial_verify.cm import CMConfig, is_cohen_macaulay
from simplicial_verify.complex import is_induced
from simplicial_verify.glue.schemas import GlueHypotheses, GlueSpec

logger = structlog.get_logger(__name__)


def check_glue_hypotheses(spec: GlueSpec, config: CMConfig | None = None) -> GlueHypotheses:
    """
    Evaluate every hypothesis of the gluing theorem; nothing is enforced and no
    error is raised.
    """
    subcomplex = spec.x.contains_complex(spec.a)
    report = GlueHypotheses(
        x_cm=is_cohen_macaulay(spec.x, config),
        a_cm=is_cohen_macaulay(spec.a, config),
        subcomplex=subcomplex,
        induced=is_induced(spec.x, spec.a) if subcomplex else None,
        codimension=spec.codimension,
        k=spec.k,
        copies=spec.copies,
    )
    logger.info(
        "Glue hypotheses checked.",
        conditions_hold=report.conditions_hold,
        theorem_applies=report.theorem_applies,
        k=report.k,
        copies=report.copies,
    )
    return report
