class CoreGamesConstants:
    "This class contains a number of constants for use throughout coregames."

    INFINITY_TOKEN = "inf"

    # Profile enumeration modes - use all small caps!
    MODE_FULL = "full"
    MODE_ACYCLIC = "acyclic"
    MODE_LINEAR = "linear"
    MODE_MAXSETS = "maxsets"
    MODES = [MODE_FULL, MODE_ACYCLIC, MODE_LINEAR, MODE_MAXSETS]

    MODE_SPELLING_VARIANTS = {
        "fullasymmetric": MODE_FULL,
        "full-asymmetric": MODE_FULL,
        "all": MODE_FULL,
        "acyclic-only": MODE_ACYCLIC,
        "acyclic_only": MODE_ACYCLIC,
        "linear-only": MODE_LINEAR,
        "linear_only": MODE_LINEAR,
        "maximalsetsonly": MODE_MAXSETS,
        "maximal-sets": MODE_MAXSETS,
        "maxset": MODE_MAXSETS,
        MODE_FULL: MODE_FULL,
        MODE_ACYCLIC: MODE_ACYCLIC,
        MODE_LINEAR: MODE_LINEAR,
        MODE_MAXSETS: MODE_MAXSETS,
    }

    # Combinatorial guards
    GUARD_RELATION_AGENDA = 5  # agenda size for FullAsymmetric / AcyclicOnly relations
    GUARD_PLAYERS = 4  # players (blocks) for full profile enumeration
    GUARD_AGENDA_FULL = 4  # agenda size for full profile enumeration
    GUARD_AGENDA_MAXSETS = 5  # agenda size for MaximalSetsOnly enumeration
    GUARD_KAPPA_PLAYERS = 8  # kappa_number_bruteforce
    GUARD_KAPPA_SETS = 6  # kappa_number_bruteforce
    GUARD_SEARCH_PLAYERS = 6  # search_divergence_instance
    GUARD_SEARCH_AGENDA = 4  # search_divergence_instance
    SEARCH_FAMILY_MAX = 3  # winning sets per family tried by the search
    # Measurable profiles are enumerated per block; cap the number of profiles
    GUARD_PROFILE_COUNT = 2000000
    GUARD_TABLE_PLAYERS = 16  # superset lookup table of WinningSets

    DEFAULT_COVER_SIZE_LIMIT = 2
    DEFAULT_JOBS = 1

    # Commands
    CMD_CORE = "core"
    CMD_COREPLUS = "coreplus"
    CMD_NAKAMURA = "nakamura"
    CMD_KAPPA = "kappa"
    CMD_WITNESS = "witness"
    CMD_WITNESS_LINEAR = "witness-linear"
    CMD_WITNESS_EXTENDED = "witness-extended"
    CMD_VERIFY = "verify"
    CMD_VERIFY_EXTENDED = "verify-extended"
    CMD_SEARCH = "search"

    # Exit statuses
    EXIT_OK = 0
    EXIT_VALIDATION = 2
    EXIT_SCALE = 3

    # Evidence paths recorded in theorem reports
    EVIDENCE_ENUMERATION = "enumeration"
    EVIDENCE_WITNESS = "witness"
    EVIDENCE_VACUOUS = "vacuous"

    # Divergence search categories
    DIVERGENCE_NU_KAPPA = "nu_prime_below_kappa"
    DIVERGENCE_INDUCED_COREPLUS = "coreplus_differs_from_induced"
    DIVERGENCE_STRICT_MAXIMALS = "coreplus_strictly_inside_core_and_maximals"
    DIVERGENCE_CATEGORIES = [
        DIVERGENCE_STRICT_MAXIMALS,
        DIVERGENCE_NU_KAPPA,
        DIVERGENCE_INDUCED_COREPLUS,
    ]

    # Instance document keys
    DOC_PLAYERS = "players"
    DOC_ALGEBRA = "algebra"
    DOC_GROUND = "ground"
    DOC_WINNING = "winning"
    DOC_ALTERNATIVES = "alternatives"
    DOC_AGENDA = "agenda"
    DOC_PROFILE = "profile"
    DOC_GROUND_ALL = "all"
    DOC_KEYS = [
        DOC_PLAYERS,
        DOC_ALGEBRA,
        DOC_GROUND,
        DOC_WINNING,
        DOC_ALTERNATIVES,
        DOC_AGENDA,
        DOC_PROFILE,
    ]

    # Environment variable naming the configuration file
    CONFIG_ENV_VAR = "COREGAMES_CONFIG"
    CONFIG_KEYS = [
        "guard",
        "jobs",
        "mode",
        "log_level",
        "cover_size_limit",
        "search",
    ]
