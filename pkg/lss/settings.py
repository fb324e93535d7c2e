import configparser
import os
from typing import Optional, Dict, Any

BUDGET_ENV = "LSS_BUDGET"

_default_settings: Dict[str, Dict[str, Any]] = {
    "engine": {
        "oracle.max.basis": 20000,
        "oracle.max.pairs": 2000000,
        "oracle.criterion.chain": False
    },
    "gbasis": {
        "gbasis.prune": True
    },
    "verify": {
        "verify.n.max": 4,
        "verify.decompose.n.max": 4,
        "verify.dim.n.max": 6,
        "verify.prime.n.max": 5,
        "verify.jobs": 1
    },
    "variety": {
        "variety.n.max": 5,
        "variety.seeds": 20,
        "variety.scale.max": 5
    },
    "char2": {
        # 0 means the default bound 2(n-1)
        "char2.degree.bound": 0
    }
}


def parse_budget(value: str):
    """Parse "<basis>" or "<basis>:<pairs>" into a pair of positive ints (pairs may be None)."""
    parts = value.strip().split(":")
    if len(parts) not in (1, 2) or not all(p.strip().isdigit() for p in parts):
        raise ValueError(f"Cannot parse {BUDGET_ENV}={value!r}. Expected <basis> or <basis>:<pairs>")
    basis = int(parts[0])
    pairs = int(parts[1]) if len(parts) == 2 else None
    if basis <= 0 or (pairs is not None and pairs <= 0):
        raise ValueError(f"{BUDGET_ENV} caps must be positive, got {value!r}")
    return basis, pairs


class Settings:
    def __init__(self, basedir: Optional[str] = None, path: Optional[str] = "lss.ini", environ=None):
        self._basedir = basedir if basedir is not None else "."
        self._configfile = os.path.join(self._basedir, path) if path else None
        self._environ = os.environ if environ is None else environ
        self._config: Optional[configparser.ConfigParser] = None
        self.load()

    def load(self):
        self._config = configparser.ConfigParser(interpolation=configparser.ExtendedInterpolation())
        self._config.read_dict(_default_settings)
        if self._configfile is not None:
            if not os.path.exists(self._configfile):
                raise ValueError(f"Config file {self._configfile} does not exist")
            self._config.read(self._configfile)
        budget = self._environ.get(BUDGET_ENV)
        if budget:
            basis, pairs = parse_budget(budget)
            self._config["engine"]["oracle.max.basis"] = str(basis)
            if pairs is not None:
                self._config["engine"]["oracle.max.pairs"] = str(pairs)

    def engine_config(self):
        return EngineConfig(self._config["engine"])

    def gbasis_config(self):
        return GBasisConfig(self._config["gbasis"])

    def verify_config(self):
        return VerifyConfig(self._config["verify"])

    def variety_config(self):
        return VarietyConfig(self._config["variety"])

    def char2_config(self):
        return Char2Config(self._config["char2"])


class Config:
    def __init__(self, section_name, config_section):
        self._section = section_name
        self._config_section = config_section

    def __repr__(self) -> str:
        return f"{self._section}: {dict(self._config_section)}"

    def get(self, key, default: str = None):
        value = self._config_section.get(key)
        if value is None:
            value = default
        if value is None:
            raise KeyError(f"Unknown key {key} in section {self._section}")
        return value

    def get_int(self, key, default: int = None):
        value = self._config_section.getint(key)
        if value is None:
            value = default
        if value is None:
            raise KeyError(f"Unknown key {key} in section {self._section}")
        return value

    def get_boolean(self, key, default: bool = None):
        value = self._config_section.getboolean(key)
        if value is None:
            value = default
        if value is None:
            raise KeyError(f"Unknown key {key} in section {self._section}")
        return value

    @classmethod
    def _section_from_dict(cls, section: str, configs: dict):
        parser = configparser.ConfigParser()
        parser.read_dict({section: _default_settings[section]})
        parser.read_dict({section: configs})
        return parser[section]


class EngineConfig(Config):
    def __init__(self, config_section):
        super().__init__("engine", config_section)

    def max_basis(self) -> int:
        return super().get_int("oracle.max.basis")

    def max_pairs(self) -> int:
        return super().get_int("oracle.max.pairs")

    def chain_criterion(self) -> bool:
        return super().get_boolean("oracle.criterion.chain")

    @classmethod
    def from_dict(cls, configs: dict):
        return cls(cls._section_from_dict("engine", configs))


class GBasisConfig(Config):
    def __init__(self, config_section):
        super().__init__("gbasis", config_section)

    def prune(self) -> bool:
        return super().get_boolean("gbasis.prune")

    @classmethod
    def from_dict(cls, configs: dict):
        return cls(cls._section_from_dict("gbasis", configs))


class VerifyConfig(Config):
    def __init__(self, config_section):
        super().__init__("verify", config_section)

    def n_max(self) -> int:
        return super().get_int("verify.n.max")

    def decompose_n_max(self) -> int:
        return super().get_int("verify.decompose.n.max")

    def dim_n_max(self) -> int:
        return super().get_int("verify.dim.n.max")

    def prime_n_max(self) -> int:
        return super().get_int("verify.prime.n.max")

    def jobs(self) -> int:
        return super().get_int("verify.jobs")

    @classmethod
    def from_dict(cls, configs: dict):
        return cls(cls._section_from_dict("verify", configs))


class VarietyConfig(Config):
    def __init__(self, config_section):
        super().__init__("variety", config_section)

    def n_max(self) -> int:
        return super().get_int("variety.n.max")

    def seeds(self) -> int:
        return super().get_int("variety.seeds")

    def scale_max(self) -> int:
        return super().get_int("variety.scale.max")

    @classmethod
    def from_dict(cls, configs: dict):
        return cls(cls._section_from_dict("variety", configs))


class Char2Config(Config):
    def __init__(self, config_section):
        super().__init__("char2", config_section)

    def degree_bound(self, n: int) -> int:
        bound = super().get_int("char2.degree.bound")
        return bound if bound > 0 else 2 * (n - 1)

    @classmethod
    def from_dict(cls, configs: dict):
        return cls(cls._section_from_dict("char2", configs))
