"""Shape-quotient gesture dissimilarity and its numerical laboratory.

The distance between two equally-sampled strokes is the sum of local
shape distances between consecutive displacement pairs; each local
distance is the plane distance between vector quotients (complex or
Clifford, equivalently).  The package also ships the analytic fixtures
and sweep machinery that verify the discretization limits, a template
recognizer, a CLI and an HTTP service.
"""

from .clifford import (E1, E2, I, ONE, Multivector, geometric_product,
                       mv_dot, mv_norm, vector_inverse, vector_quotient,
                       wedge)
from .convergence import (SamplingMode, SweepRow, divided_difference_check,
                          emit_report, estimate_rate, sweep_ftl,
                          sweep_shape_sum)
from .errors import ShapeError
from .ftl import (DissimilarityReport, composite_simpson, ftl, gesture_shape,
                  shape_functional, shape_integral, shape_sum,
                  shape_sum_centered, wftl)
from .geometry import (BasicGesture, Vec2, clifford_shape, complex_of_vec,
                       complex_shape, lsd, lsd_dot, vec_of_complex,
                       weighted_shape)
from .gesture import (AnalyticGesture, SampledGesture, TimedPoint, circle,
                      clean_stroke, fixtures, line, parabola, sample_at,
                      spiral, transform, uniform_sample, validate_sample,
                      wave)
from .recognizer import (RecognitionResult, Template, TemplateStore,
                         recognize, resample_uniform, store_load, store_save)

__version__ = "0.1.0"
