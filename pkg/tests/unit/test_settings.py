import unittest

from lss.groebner import Budget
from lss.settings import Settings, EngineConfig, parse_budget


class SettingsTest(unittest.TestCase):
    def test_load(self):
        s = Settings("tests/config")
        assert s.engine_config().max_basis() == 500
        assert s.engine_config().max_pairs() == 2000000
        assert s.engine_config().chain_criterion()
        assert s.verify_config().n_max() == 3
        assert s.verify_config().decompose_n_max() == 4
        assert s.verify_config().jobs() == 2
        assert s.verify_config().prime_n_max() == 4
        assert s.verify_config().dim_n_max() == 6
        assert s.char2_config().degree_bound(5) == 6

    def test_defaults(self):
        s = Settings(path=None, environ={})
        assert s.engine_config().max_basis() == 20000
        assert not s.engine_config().chain_criterion()
        assert s.gbasis_config().prune()
        assert s.variety_config().seeds() == 20
        assert s.variety_config().scale_max() == 5
        assert s.variety_config().n_max() == 5
        assert (s.verify_config().dim_n_max(), s.verify_config().prime_n_max()) == (6, 5)
        # 0 falls back to 2(n-1)
        assert s.char2_config().degree_bound(5) == 8

    def test_budget_from_environment(self):
        s = Settings(path=None, environ={"LSS_BUDGET": "10:20"})
        budget = Budget.from_config(s.engine_config())
        assert budget == Budget(10, 20)

        s = Settings(path=None, environ={"LSS_BUDGET": "15"})
        assert s.engine_config().max_basis() == 15
        assert s.engine_config().max_pairs() == 2000000

    def test_bad_budget(self):
        with self.assertRaises(ValueError):
            Settings(path=None, environ={"LSS_BUDGET": "lots"})
        with self.assertRaises(ValueError):
            parse_budget("0:5")
        assert parse_budget(" 12 ") == (12, None)
        assert parse_budget("12:34") == (12, 34)

    def test_missing_file(self):
        with self.assertRaises(ValueError):
            Settings("tests/config", "nope.ini")

    def test_from_dict(self):
        config = EngineConfig.from_dict({"oracle.max.basis": "7"})
        assert config.max_basis() == 7
        assert config.max_pairs() == 2000000
        with self.assertRaises(KeyError):
            config.get("oracle.max.nothing")
