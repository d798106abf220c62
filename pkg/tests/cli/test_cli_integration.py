"""
Command-Line Integration Tests

Tests cover:
1. Experiment files: defaults, YAML round trip, invalid files
2. Flag overrides on top of experiment files
3. Every subcommand through dispatch(), with its JSON and CSV output
4. Exit codes: 0 success, 1 domain errors, 2 usage errors
5. Quantitative checks behind the figure data
6. JSON output against the shipped schemas
"""

import json

import jsonschema
import numpy as np
import pytest
from scipy import integrate

from cli import (
    ConfigError,
    ExperimentConfig,
    build_parser,
    dispatch,
    figure_name,
    figure_tables,
    load_experiment,
    save_experiment,
)
from cli.figures import curve_table
from cli.main import merge_config
from cli.utils.output_utils import SCHEMA_NAMES, load_schema, read_csv, write_csv
from cli.utils.test_functions import get_test_function
from config.settings import DEFAULT_EXPERIMENT_FILE, VERIFY_STEADY_TIMES
from exact1d import DensityCurve
from intertwine import kernel_exact_b1
from rootsys import RootFamily, build_a, build_custom, save_root_system

# ============================================================================
# TEST FIXTURES
# ============================================================================


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    """Run every command from a scratch directory (logs land there)"""
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def out_dir(tmp_path):
    """Output directory for command results"""
    return tmp_path / "output"


def run(*argv):
    """dispatch() with string arguments"""
    return dispatch([str(a) for a in argv])


# ============================================================================
# EXPERIMENT CONFIG TESTS
# ============================================================================


class TestExperimentConfig:
    """Test experiment files and overrides"""

    def test_defaults(self):
        """Defaults describe the B_1 steady-state experiment"""
        config = ExperimentConfig()
        assert config.system == "b1"
        assert config.x0 == [2.0]
        assert config.times is None
        assert config.steady_times == list(VERIFY_STEADY_TIMES)
        assert config.simulate_times == [config.t]
        assert config.seed is None
        assert config.tolerances["center"] == 1e-3

    def test_default_file_loads(self):
        """Shipped experiment.yaml matches the defaults"""
        config = load_experiment(DEFAULT_EXPERIMENT_FILE)
        assert config.system == "b1"
        assert config.freeze_betas == [50.0, 200.0, 800.0]

    def test_round_trip(self, tmp_path):
        """save_experiment / load_experiment preserve every field"""
        config = ExperimentConfig(system="a:3", x0=[1.0, 0.0, -1.0], seed=5)
        path = save_experiment(config, tmp_path / "exp" / "a2.yaml")
        assert load_experiment(path).to_dict() == config.to_dict()

    def test_partial_tolerances_merge(self):
        """Missing tolerance keys keep their defaults"""
        config = ExperimentConfig(tolerances={"slope": 0.5})
        assert config.tolerances["slope"] == 0.5
        assert config.tolerances["exponent"] == 0.05

    def test_unknown_key(self):
        """Unknown keys raise ConfigError"""
        with pytest.raises(ConfigError, match="Unknown experiment keys"):
            ExperimentConfig.from_dict({"sytem": "b1"})

    @pytest.mark.parametrize(
        "overrides",
        [
            {"beta": 0.0},
            {"times": []},
            {"source": "oracle"},
            {"test_function": "cubic"},
            {"n_paths": 1},
            {"dt_safety": 1.5},
            {"tolerances": {"slope": -1.0}},
        ],
    )
    def test_invalid_values(self, overrides):
        """Out-of-range values raise ConfigError"""
        with pytest.raises(ConfigError):
            ExperimentConfig.from_dict(overrides)

    def test_missing_file(self, tmp_path):
        """Missing experiment files raise ConfigError"""
        with pytest.raises(ConfigError, match="not found"):
            load_experiment(tmp_path / "missing.yaml")

    def test_non_mapping_file(self, tmp_path):
        """Top-level lists are rejected"""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError, match="mapping"):
            load_experiment(path)

    def test_broken_yaml(self, tmp_path):
        """Unparseable YAML raises ConfigError"""
        path = tmp_path / "broken.yaml"
        path.write_text("beta: [1.0\n")
        with pytest.raises(ConfigError, match="Cannot parse"):
            load_experiment(path)

    def test_flags_override_file(self, tmp_path):
        """Command line values win over the file"""
        path = save_experiment(ExperimentConfig(beta=3.0, seed=1), tmp_path / "e.yaml")
        args = build_parser().parse_args(
            ["verify-steady", "--config", str(path), "--beta", "5", "--x0", "1.5"]
        )
        config = merge_config(args)
        assert config.beta == 5.0
        assert config.x0 == [1.5]
        assert config.seed == 1


# ============================================================================
# ROOT SYSTEM AND PEAK COMMAND TESTS
# ============================================================================


class TestRootSystemCommands:
    """Test rootsys and peakset"""

    def test_show(self, capsys):
        """show prints the summary with the group order"""
        assert run("rootsys", "show", "--system", "a:3", "--spectral-degree", "2") == 0
        info = json.loads(capsys.readouterr().out)
        assert info["gamma"] == pytest.approx(3.0)
        assert info["weyl_group_size"] == 6
        assert info["schur_is_scalar"]
        assert info["spectral_check"]

    def test_show_to_file(self, tmp_path):
        """--out writes JSON instead of printing"""
        out = tmp_path / "b2.json"
        assert run("rootsys", "show", "--system", "b:2", "--out", out) == 0
        assert json.loads(out.read_text())["n_positive"] == 4

    def test_validate_good_file(self, tmp_path, capsys):
        """A saved system validates"""
        path = tmp_path / "a2.json"
        save_root_system(build_a(3), path)
        assert run("rootsys", "validate", "--file", path) == 0
        assert json.loads(capsys.readouterr().out)["status"] == "valid"

    def test_validate_broken_file(self, tmp_path):
        """Broken JSON exits 1"""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert run("rootsys", "validate", "--file", path) == 1

    def test_bad_system_spec(self):
        """Unknown families are domain errors"""
        assert run("rootsys", "show", "--system", "c:3") == 1

    def test_peakset(self, capsys):
        """B_1 peaks at +-1"""
        assert run("peakset", "--system", "b1") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["size"] == 2
        assert sorted(p[0] for p in data["points"]) == pytest.approx([-1.0, 1.0])


# ============================================================================
# EXACT B_1 COMMAND TESTS
# ============================================================================


class TestExactCommands:
    """Test density1d and kernel"""

    def test_density1d(self, out_dir):
        """Scaled density is tabulated with unit headers"""
        flags = ["--t", "20", "--beta", "1", "--x0", "2", "--half-width", "8"]
        code = run("density1d", *flags, "--points", "1601", "--output-dir", out_dir)
        assert code == 0
        table = read_csv(out_dir / "density1d_scaled.csv")
        assert list(table) == ["Y [scaled position]", "scaled [density per unit Y]"]
        y = table["Y [scaled position]"]
        mass = integrate.trapezoid(table["scaled [density per unit Y]"], y)
        assert mass == pytest.approx(1.0, abs=1e-3)

    def test_density1d_steady_to_file(self, tmp_path):
        """--out overrides the output directory"""
        out = tmp_path / "steady.csv"
        assert run("density1d", "--curve", "steady", "--out", out) == 0
        assert out.exists()

    def test_density1d_bad_time(self):
        """Nonpositive t is a configuration error"""
        assert run("density1d", "--t", "0") == 1

    def test_kernel_b1(self, capsys):
        """Exact value sits within the bounds"""
        flags = ["--system", "b1", "--beta", "6"]
        code = run("kernel", *flags, "--x", "1.5", "--y", "0.7")
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["within_bounds"]
        assert data["exact"] > 0.0
        assert "rank_deficient_limit" not in data

    def test_kernel_uses_effective_beta(self, tmp_path, capsys):
        """kappa = 3 on B_1 is normalized to 1 and beta grows threefold"""
        system = build_custom([[1.0], [-1.0]], kappa=3.0, family=RootFamily.B)
        path = save_root_system(system, tmp_path / "b1_kappa3.json")
        flags = ["--system", path, "--beta", "2"]
        code = run("kernel", *flags, "--x", "1.5", "--y", "0.7")
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["beta"] == 2.0
        assert data["effective_beta"] == pytest.approx(6.0)
        assert data["exact"] == pytest.approx(float(kernel_exact_b1(6.0, 1.05)))

    def test_kernel_dimension_mismatch(self):
        """Points must match the ambient dimension"""
        code = run("kernel", "--system", "a:3", "--x", "1,0", "--y", "0,1")
        assert code == 1


# ============================================================================
# SIMULATION AND VERIFICATION COMMAND TESTS
# ============================================================================


class TestSimulationCommands:
    """Test simulate, verify-steady and verify-freeze"""

    def test_simulate_needs_seed(self):
        """simulate without --seed is a usage error"""
        assert run("simulate", "--system", "b1", "--x0", "1") == 2

    def test_simulate(self, out_dir):
        """Ensemble summary and histogram CSV are written"""
        flags = ["--system", "b1", "--beta", "2", "--x0", "1", "--t", "1"]
        flags += ["--seed", "1", "--n-paths", "500"]
        code = run("simulate", *flags, "--output-dir", out_dir)
        assert code == 0
        summary = json.loads((out_dir / "simulate.json").read_text())
        assert summary["system"] == "B_1"
        table = read_csv(out_dir / "simulate_t1.csv")
        assert "f_0 [density per unit Y]" in table

    def test_simulate_times_from_file(self, tmp_path, out_dir):
        """times in the experiment file set the recorded times"""
        path = tmp_path / "sim.yaml"
        path.write_text("beta: 2.0\nx0: [1.0]\ntimes: [0.5, 1.0]\nn_paths: 200\n")
        code = run("simulate", "--config", path, "--seed", "3", "--output-dir", out_dir)
        assert code == 0
        summary = json.loads((out_dir / "simulate.json").read_text())
        assert summary["config"]["record_schedule"] == [0.5, 1.0]
        assert (out_dir / "simulate_t0.5.csv").exists()
        assert (out_dir / "simulate_t1.csv").exists()

    def test_monte_carlo_steady_needs_seed(self):
        """Randomized verification requires a seed"""
        assert run("verify-steady", "--source", "monte_carlo") == 2

    def test_verify_steady_exact(self, out_dir):
        """Exact B_1 linear decay passes at -1/2"""
        assert run("verify-steady", "--output-dir", out_dir) == 0
        report = json.loads((out_dir / "verify_steady.json").read_text())
        assert report["passed"]
        assert report["expected"]["decay"] == -0.5
        assert report["exponents"]["decay"] == pytest.approx(-0.5, abs=0.02)
        table = read_csv(out_dir / "verify_steady.csv")
        assert table["t [time]"].size == len(VERIFY_STEADY_TIMES)

    def test_verify_steady_symmetrized(self, out_dir):
        """Symmetrized start with |Y|^2 decays at -1"""
        flags = ["--symmetrize", "--test-function", "square"]
        code = run("verify-steady", *flags, "--output-dir", out_dir)
        assert code == 0
        report = json.loads((out_dir / "verify_steady.json").read_text())
        assert report["expected"]["decay"] == -1.0

    def test_exact_source_needs_b1(self):
        """The exact source refuses other root systems"""
        code = run("verify-steady", "--system", "a:3", "--x0", "1,0,-1")
        assert code == 1

    def test_verify_freeze_exact(self, out_dir):
        """Mechanism report is written for the exact B_1 densities"""
        code = run("verify-freeze", "--output-dir", out_dir)
        assert code == 0
        report = json.loads((out_dir / "verify_freeze.json").read_text())
        assert report["passed"]
        assert all(report["checks"].values())
        assert len(report["fits"]) == 9
        assert report["exponents"]["coefficient"] == pytest.approx(-0.5, abs=0.1)

    def test_bad_config_file(self, tmp_path):
        """An invalid experiment file exits 1"""
        path = tmp_path / "bad.yaml"
        path.write_text("beta: -1\n")
        assert run("verify-steady", "--config", path) == 1


# ============================================================================
# FIGURE AND OUTPUT TESTS
# ============================================================================


class TestFiguresAndOutput:
    """Test figure data and output helpers"""

    def test_reproduce_figure_one(self, out_dir):
        """Figure 1 (relaxation) writes one CSV per time"""
        assert run("reproduce-figures", "--fig", "1", "--out", out_dir) == 0
        written = sorted(p.name for p in out_dir.glob("relaxation_*.csv"))
        times = ("2", "20", "200", "2000")
        assert written == [f"relaxation_t{t}.csv" for t in times]

    def test_coupling_columns(self):
        """Coupling figure pairs f with G~_beta"""
        tables = figure_tables("coupling")
        stems = ["coupling_beta100", "coupling_beta2", "coupling_beta5000"]
        assert sorted(tables) == stems
        assert "gtilde [density per unit Y]" in tables["coupling_beta100"]

    def test_figure_names_are_aliases(self):
        """Figure numbers and names select the same tables"""
        assert figure_name(2) == figure_name("2") == "coupling"
        assert figure_name("crossover") == "crossover"

    def test_unknown_figure(self):
        """Only figures 1 to 3 exist"""
        with pytest.raises(ValueError):
            figure_tables("phase")
        with pytest.raises(ValueError):
            figure_tables(4)
        assert run("reproduce-figures", "--fig", "4") == 2

    def test_unknown_command(self):
        """Unknown subcommands are usage errors"""
        assert run("bogus") == 2

    def test_csv_round_trip(self, tmp_path):
        """read_csv returns the written columns"""
        path = write_csv(tmp_path / "t.csv", {"a [1]": [1.0, 2.0], "b [s]": [3.0, 4.0]})
        table = read_csv(path)
        np.testing.assert_allclose(table["b [s]"], [3.0, 4.0])

    def test_csv_unequal_columns(self, tmp_path):
        """Columns must have equal length"""
        with pytest.raises(ValueError):
            write_csv(tmp_path / "t.csv", {"a": [1.0], "b": [1.0, 2.0]})

    def test_test_functions(self):
        """Named test functions act on the last axis"""
        y = np.array([[2.0, 1.0]])
        assert get_test_function("linear")(y) == pytest.approx([3.0])
        assert get_test_function("square")(y) == pytest.approx([5.0])
        with pytest.raises(ValueError):
            get_test_function("cubic")


# ============================================================================
# FIGURE CHECK TESTS
# ============================================================================

F_COLUMN = "f [density per unit Y]"
Y_COLUMN = "Y [scaled position]"


class TestFigureChecks:
    """Test the quantitative claims behind the three figures"""

    def test_relaxation_reaches_steady_state(self):
        """Figure 1, t = 2000: sup |f - steady| on |Y| <= 3 is below 2e-2"""
        grid = np.linspace(-3.0, 3.0, 1201)
        curves = (DensityCurve.SCALED, DensityCurve.STEADY)
        table = curve_table(2000.0, 1.0, curves, grid=grid)
        gap = np.max(np.abs(table[F_COLUMN] - table["steady [density per unit Y]"]))
        assert gap < 2e-2

    def test_coupling_matches_gaussian_tilde(self):
        """Figure 2, beta = 100: sup |f - G~| is below 5% of the peak height"""
        table = figure_tables(2)["coupling_beta100"]
        f = table[F_COLUMN]
        gap = np.max(np.abs(f - table["gtilde [density per unit Y]"]))
        assert gap < 0.05 * np.max(f)

    def test_crossover_peaks_equalize(self):
        """Figure 3, t = 1000: the two peaks of f agree in height within 5%"""
        table = figure_tables(3)["crossover_t1000"]
        y, f = table[Y_COLUMN], table[F_COLUMN]
        ratio = np.max(f[y > 0.0]) / np.max(f[y < 0.0])
        assert ratio == pytest.approx(1.0, abs=0.05)


# ============================================================================
# OUTPUT SCHEMA TESTS
# ============================================================================


def assert_matches(name, data):
    """Validate one command output against its shipped schema"""
    jsonschema.validate(data, load_schema(name))


class TestOutputSchemas:
    """Test command JSON against cli/schemas"""

    @pytest.mark.parametrize("name", SCHEMA_NAMES)
    def test_schemas_are_valid(self, name):
        """Every shipped schema is itself a valid 2020-12 schema"""
        jsonschema.Draft202012Validator.check_schema(load_schema(name))

    def test_unknown_schema(self):
        """Only the shipped names load"""
        with pytest.raises(ValueError, match="No output schema"):
            load_schema("density1d")

    def test_rootsys_output(self, capsys):
        """rootsys show with a spectral check"""
        assert run("rootsys", "show", "--system", "a:3", "--spectral-degree", "2") == 0
        assert_matches("rootsys", json.loads(capsys.readouterr().out))

    def test_peakset_output(self, capsys):
        """peakset on B_2"""
        assert run("peakset", "--system", "b:2") == 0
        assert_matches("peakset", json.loads(capsys.readouterr().out))

    def test_kernel_output(self, capsys):
        """kernel on B_1 carries the exact value and the bounds check"""
        assert run("kernel", "--system", "b1", "--x", "1.5", "--y", "0.7") == 0
        assert_matches("kernel", json.loads(capsys.readouterr().out))

    def test_simulate_output(self, out_dir):
        """simulate summary"""
        flags = ["--system", "a:3", "--x0", "1,0,-1", "--beta", "2", "--t", "0.5"]
        flags += ["--seed", "2", "--n-paths", "200"]
        assert run("simulate", *flags, "--output-dir", out_dir) == 0
        assert_matches("simulate", json.loads((out_dir / "simulate.json").read_text()))

    def test_verify_steady_output(self, out_dir):
        """verify-steady report on the exact source"""
        assert run("verify-steady", "--output-dir", out_dir) == 0
        report = json.loads((out_dir / "verify_steady.json").read_text())
        assert_matches("verify_steady", report)

    def test_verify_freeze_output(self, out_dir):
        """verify-freeze report on the exact densities"""
        assert run("verify-freeze", "--output-dir", out_dir) == 0
        report = json.loads((out_dir / "verify_freeze.json").read_text())
        assert_matches("verify_freeze", report)
