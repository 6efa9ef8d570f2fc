from .oracle import floor_root, floor_root_int
from .range_verifier import DifferentialVerifier, Mismatch, VerificationReport, verify_random, verify_range
