"""
Simulation Implementations Package

Exposes concrete samplers.
"""

from simulate.implementations.exact_b1 import ExactB1Sampler
from simulate.implementations.jump_diffusion import JumpDiffusionSampler

# Public API
__all__ = [
    "ExactB1Sampler",
    "JumpDiffusionSampler",
]
