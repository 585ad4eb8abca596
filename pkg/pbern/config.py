import os
import json

DEFAULT_CONFIG_DIR = os.path.expanduser("~/.config/pbern")
DEFAULT_CONFIG_FILE = os.path.join(DEFAULT_CONFIG_DIR, "defaults")
DEFAULTS = {"workers": 1}


def ensure_config_dir():
    """Ensure the configuration directory exists."""
    os.makedirs(DEFAULT_CONFIG_DIR, exist_ok=True)


def load_config():
    """Load configuration from the defaults file; reading never writes."""
    if not os.path.exists(DEFAULT_CONFIG_FILE):
        return dict(DEFAULTS)

    try:
        with open(DEFAULT_CONFIG_FILE, "r") as f:
            stored = json.load(f)
    except (json.JSONDecodeError, OSError):
        return dict(DEFAULTS)
    if not isinstance(stored, dict):
        return dict(DEFAULTS)
    return {**DEFAULTS, **{k: v for k, v in stored.items() if k in DEFAULTS}}


def save_config(config):
    """Save configuration to the defaults file."""
    ensure_config_dir()
    with open(DEFAULT_CONFIG_FILE, "w") as f:
        json.dump(config, f, indent=4)


def get_default_workers() -> int:
    try:
        return int(load_config()["workers"])
    except (TypeError, ValueError):
        return DEFAULTS["workers"]


def set_defaults(**values):
    """Store the given non-None values in the configuration."""
    config = load_config()
    config.update({k: v for k, v in values.items() if v is not None})
    save_config(config)
    return config
