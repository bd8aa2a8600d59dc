from .objects import HarnessConfig, Mismatch, VerificationReport, \
    EXHAUSTIVE_MAX_N, SAMPLE_MAX_N

from .corpus import golden_corpus, lookup

from .verify import verify_theorem, run_harness
