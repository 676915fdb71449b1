class Provenance:
    HASH_LENGTH = 16
    SUFFIX = ".provenance.json"
    TEST_SEED_OFFSET = 1_000_003
