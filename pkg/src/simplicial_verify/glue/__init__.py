from .construction import glue, glue_constructibility_certificate
from .hypotheses import check_glue_hypotheses
from .schemas import GlueHypotheses, GlueResult, GlueSpec

__all__ = [
    "GlueHypotheses",
    "GlueResult",
    "GlueSpec",
    "check_glue_hypotheses",
    "glue",
    "glue_constructibility_certificate",
]
