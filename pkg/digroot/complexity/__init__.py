from .complexity import ComplexityReport, compare, is_linear, measured_slopes, predicted_counts
