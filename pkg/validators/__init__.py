"""
Validators package for self-dual code checks.
"""

from validators.alpha_validator import AlphaValidator
from validators.design_validator import DesignValidator, one_design_check, scalar_classes
from validators.lemma_validator import LemmaValidator, lemma_check
from validators.self_duality_validator import SelfDualityValidator
from validators.validation_pipeline import CheckResult, ValidationPipeline

__all__ = [
    'AlphaValidator',
    'CheckResult',
    'DesignValidator',
    'LemmaValidator',
    'SelfDualityValidator',
    'ValidationPipeline',
    'lemma_check',
    'one_design_check',
    'scalar_classes',
]
