import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    # Desk-scale guards ("off" lifts them; results beyond are unsupported)
    SIZE_GUARD_ENABLED = os.environ.get('BEZOUT_SIZE_GUARD', 'on').lower() != 'off'
    MAX_VARS = int(os.environ.get('BEZOUT_MAX_VARS', '4'))
    MAX_DEGREE = int(os.environ.get('BEZOUT_MAX_DEGREE', '6'))
    MAX_EQUATIONS = int(os.environ.get('BEZOUT_MAX_EQUATIONS', '4'))
    MAX_UNKNOWNS = int(os.environ.get('BEZOUT_MAX_UNKNOWNS', '120'))

    # Lines-rule determinant is exponential; larger matrices go to Bareiss
    PERMUTATION_RULE_MAX = int(os.environ.get('BEZOUT_PERMUTATION_RULE_MAX', '8'))

    # Arbitrary-equation family and superfluous-factor stripping
    DEFAULT_SEED = int(os.environ.get('BEZOUT_DEFAULT_SEED', '0'))
    DEFAULT_RUNS = int(os.environ.get('BEZOUT_DEFAULT_RUNS', '3'))
    SPECIALIZATION_BOUND = int(os.environ.get('BEZOUT_SPECIALIZATION_BOUND', '97'))

    # Radical evaluation (the only floating-point surface)
    RADICAL_DIGITS = int(os.environ.get('BEZOUT_RADICAL_DIGITS', '12'))

    # Logging
    LOG_LEVEL = os.environ.get('BEZOUT_LOG_LEVEL', 'WARNING').upper()
