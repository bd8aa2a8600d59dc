from .objects import Classification, Constant, Dictator, ParityPair, \
    NotExactOneQuery, Separation, classification_from_json, is_exact_family

from .classify import classify, classification_matches, two_variable_code

from .synthesis import synthesize, verify_family, separation

from .deutsch_jozsa import deutsch_jozsa, promise_table
