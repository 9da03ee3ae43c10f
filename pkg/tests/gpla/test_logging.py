from __future__ import annotations

from gpla.circuits import Elem, Resistor, solve
from gpla.logging import setup_logging


class TestSetupLogging:
    def test_component_in_lines(self, capsys):
        setup_logging("INFO")
        solve(Elem(Resistor(1)))
        err = capsys.readouterr().err
        assert "circuits" in err
        assert "solved circuit" in err

    def test_level_filters(self, capsys):
        setup_logging("WARNING")
        solve(Elem(Resistor(1)))
        assert "solved circuit" not in capsys.readouterr().err

    def test_disabled_by_default(self, capsys):
        solve(Elem(Resistor(1)))
        assert "solved circuit" not in capsys.readouterr().err
