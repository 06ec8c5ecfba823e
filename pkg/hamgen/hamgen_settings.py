import json
import os
import sys


DEFAULT_CONFIG = {
    "circuit_cap": 1000000,
    "threads": 1,
    "isomorphism_max_vertices": 64,
    "cayley_max_order": 64,
    "not_cayley_max_vertices": 16,
    "bandwidth_max_vertices": 16,
    "prism_max_vertices": 20,
    "survey_max_vertices": 14,
    "survey_max_rejections": 200000,
    "max_connectivity": 4,
}

REPORT_SCHEMA = "report-v1"
SAMPLER_ID = "numpy-pcg64"

_ACTIVE = {}


def log(message):
    print("Hamgen: {}".format(message), file=sys.stderr)


def config_path():
    explicit = os.environ.get("HAMGEN_CONFIG", "")
    if explicit and explicit.strip():
        return os.path.abspath(os.path.expanduser(explicit))
    base = os.environ.get("XDG_CONFIG_HOME", "")
    if not base or not base.strip():
        base = os.path.join(os.path.expanduser("~"), ".config")
    return os.path.join(base, "hamgen", "config.json")


def safe_int(value, default, minimum=1):
    try:
        parsed = int(value)
    except (TypeError, ValueError):
        return default
    if parsed < minimum:
        return minimum
    return parsed


def load_config(path=None):
    cfg = dict(DEFAULT_CONFIG)
    path = path or config_path()
    if os.path.isfile(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                loaded = json.load(fh)
            if isinstance(loaded, dict):
                cfg.update(loaded)
            else:
                log("Ignoring invalid config.json: expected object at {}".format(path))
        except (OSError, ValueError) as exc:
            log("Failed to load config.json at {}: {}".format(path, exc))
    for key, default in DEFAULT_CONFIG.items():
        cfg[key] = safe_int(cfg.get(key, default), default)
    return cfg


def activate(cfg):
    _ACTIVE.clear()
    _ACTIVE.update(cfg)


def setting(key):
    if key in _ACTIVE:
        return _ACTIVE[key]
    return DEFAULT_CONFIG[key]
