"""Service configuration from environment variables or CLI flags.

Recognized variables: PORT, STORE_PATH, BATCH_SIZE (default 20),
GOAL_MIN (default 2), RNG_SEED, SESSION_TTL_HOURS, ADMIN_NAME,
ADMIN_EMAIL, ADMIN_PASSWORD. An admin account is bootstrapped on first
start when the admin settings are present (there must be at least one
curator before anyone can sign up).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ConfigInvalid


@dataclass
class AppConfig:
    port: int = 8000
    store_path: str = ":memory:"
    batch_size: int = 20
    goal_min: int = 2
    rng_seed: int | None = None
    session_ttl_hours: int = 24
    admin_name: str = "Curator"
    admin_email: str = ""
    admin_password: str = ""

    def __post_init__(self):
        if self.batch_size <= 0:
            raise ConfigInvalid(f"BATCH_SIZE must be positive, got {self.batch_size}")
        if not 1 <= self.goal_min <= 17:
            raise ConfigInvalid(f"GOAL_MIN must be in 1..17, got {self.goal_min}")
        if not 1 <= self.port <= 65535:
            raise ConfigInvalid(f"PORT must be in 1..65535, got {self.port}")

    @classmethod
    def from_env(cls, env=None) -> "AppConfig":
        env = os.environ if env is None else env

        def _int(name, default):
            raw = env.get(name, "").strip()
            if not raw:
                return default
            try:
                return int(raw)
            except ValueError:
                raise ConfigInvalid(f"{name} must be an integer, got {raw!r}") from None

        seed_raw = env.get("RNG_SEED", "").strip()
        return cls(
            port=_int("PORT", 8000),
            store_path=env.get("STORE_PATH", ":memory:").strip() or ":memory:",
            batch_size=_int("BATCH_SIZE", 20),
            goal_min=_int("GOAL_MIN", 2),
            rng_seed=int(seed_raw) if seed_raw else None,
            session_ttl_hours=_int("SESSION_TTL_HOURS", 24),
            admin_name=env.get("ADMIN_NAME", "Curator"),
            admin_email=env.get("ADMIN_EMAIL", ""),
            admin_password=env.get("ADMIN_PASSWORD", ""),
        )
