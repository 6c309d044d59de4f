import io

import pytest

from storage_rules.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def csv_rows(text):
    lines = text.strip("\n").split("\n")
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_breakeven_dell_preset():
    code, out = run("breakeven", "--device", "dell_tpcc_1997", "--format", "csv")
    assert code == 0
    header, ((tech, econ, interval),) = csv_rows(out)
    assert header == ["technology_ratio", "economic_ratio", "interval_s"]
    assert float(tech) == pytest.approx(2.0)
    assert float(econ) == pytest.approx(133.333, abs=0.001)
    assert float(interval) == pytest.approx(266.667, abs=0.001)


def test_breakeven_explicit_unit_inputs():
    code, out = run("breakeven", "--pages-per-mb", "1", "--accesses-per-sec", "1",
                    "--device-price", "1", "--ram-price", "1", "--format", "csv")
    assert code == 0
    _, ((_, _, interval),) = csv_rows(out)
    assert float(interval) == 1.0


def test_breakeven_tape_notes_published_two_months():
    code, out = run("breakeven", "--device", "table8_tape_robot",
                    "--page-bytes", "8192")
    assert code == 0
    assert "2.56014e+06" in out
    assert "note:" in out and "two months" in out


def test_breakeven_sun_uses_companion_ram_price():
    code, out = run("breakeven", "--device", "sun_oracle_1997", "--format", "csv")
    assert code == 0
    _, ((_, econ, interval),) = csv_rows(out)
    assert float(econ) == pytest.approx(1690 / 13)
    assert float(interval) == pytest.approx(260.0, abs=0.01)


def test_breakeven_raid5_quadruples_write_interval():
    base = float(csv_rows(run("breakeven", "--device", "dell_tpcc_1997",
                              "--format", "csv")[1])[1][0][2])
    raided = float(csv_rows(run("breakeven", "--device", "dell_tpcc_1997",
                                "--raid", "5", "--write-fraction", "1.0",
                                "--format", "csv")[1])[1][0][2])
    assert raided == pytest.approx(4 * base, rel=1e-5)  # both sides 6-sig-digit CSV


def test_breakeven_flag_errors_exit_2():
    assert run("breakeven")[0] == 2  # neither device nor explicit params
    assert run("breakeven", "--device", "no_such_device")[0] == 2
    assert run("breakeven", "--device", "table8_ram")[0] == 2
    assert main(["breakeven", "--raid", "7"]) == 2  # argparse rejects the choice


def test_breakeven_from_device_file(tmp_path):
    path = tmp_path / "mine.device"
    path.write_text(
        "[device]\nname = d\nkind = disk\nprice_dollars = 2000\n"
        "capacity_bytes = 9e9\nlatency_s = 0.01\nbandwidth_bps = 1e7\n"
        "accesses_per_sec = 64\n", encoding="utf-8")
    code, out = run("breakeven", "--device", str(path), "--format", "csv")
    assert code == 0
    assert float(csv_rows(out)[1][0][2]) == pytest.approx(266.667, abs=0.001)


def test_breakeven_malformed_device_file_exits_3(tmp_path):
    path = tmp_path / "broken.device"
    path.write_text("[device]\nname = d\nkind = disk\n", encoding="utf-8")
    assert run("breakeven", "--device", str(path))[0] == 3


def test_seqrule_point_values():
    code, out = run("seqrule", "--transfer-bytes", "65536",
                    "--bandwidth-bps", str(5 * 2**20), "--format", "csv")
    assert code == 0
    header, ((_, _, passes, interval),) = csv_rows(out)
    assert header == ["transfer_bytes", "bandwidth_bps", "passes", "interval_s"]
    assert passes == "read_once"
    assert float(interval) == pytest.approx(26.667, abs=0.001)
    _, out = run("seqrule", "--transfer-bytes", "65536",
                 "--bandwidth-bps", str(5 * 2**20),
                 "--passes", "write_then_read", "--format", "csv")
    assert float(csv_rows(out)[1][0][3]) == pytest.approx(53.333, abs=0.001)


def test_seqrule_curve_and_asymptote():
    code, out = run("seqrule", "--curve", "--bandwidth-bps", str(10 * 2**20),
                    "--page-sizes", "8192,65536", "--format", "csv")
    assert code == 0
    header, rows = csv_rows(out)
    assert header == ["page_bytes", "interval_s"]
    assert float(rows[0][1]) == pytest.approx(184.0, abs=0.05)
    code, out = run("seqrule", "--asymptote", "--bandwidth-bps", str(10 * 2**20),
                    "--format", "csv")
    assert float(csv_rows(out)[1][0][1]) == pytest.approx(13.333, abs=0.001)
    code, out = run("seqrule", "--curve", "--bandwidth-bps", str(10 * 2**20))
    assert "note:" in out and "asymptote" in out


def test_sortplan_plan_and_inverse():
    code, out = run("sortplan", "--file-bytes", "1e11", "--memory-bytes", "1e8",
                    "--buffer-bytes", "1e5", "--format", "csv")
    assert code == 0
    header, (row,) = csv_rows(out)
    assert header[-4:] == ["passes", "run_count", "fan_in", "feasible"]
    assert row[-4:] == ["2", "1000", "1000", "yes"]
    code, out = run("sortplan", "--file-bytes", "1e12", "--memory-bytes", "1e6",
                    "--buffer-bytes", "1e5", "--format", "csv")
    assert csv_rows(out)[1][0][-1] == "no"
    code, out = run("sortplan", "--max-file", "--memory-bytes", "5e9", "--format", "csv")
    assert float(csv_rows(out)[1][0][2]) == pytest.approx(3.39e14, rel=0.01)
    assert run("sortplan")[0] == 2


def test_indexsize_table6_csv():
    code, out = run("indexsize", "--table6", "--format", "csv")
    assert code == 0
    header, rows = csv_rows(out)
    assert header == ["page_kb", "entries_per_page", "utility",
                      "access_cost_ms", "benefit_cost"]
    assert len(rows) == 7
    ratios = [float(r[4]) for r in rows]
    assert rows[ratios.index(max(ratios))][0] == "16"


def test_indexsize_figure7_csv():
    code, out = run("indexsize", "--figure7", "--format", "csv")
    assert code == 0
    header, rows = csv_rows(out)
    assert header == ["grid", "series", "page_kb", "benefit_cost"]
    cells = {(r[0], r[1], r[2]): float(r[3]) for r in rows}
    assert len(rows) == (4 + 5) * 6
    assert cells[("entry_size", "16B", "2")] == pytest.approx(0.6355, abs=0.0002)
    assert cells[("disk_speed", "40MB/s", "64")] == pytest.approx(0.987, abs=0.001)
    assert cells[("disk_speed", "5MB/s", "128")] == pytest.approx(0.345, abs=0.001)


def test_indexsize_point_and_candidates():
    code, out = run("indexsize", "--page-bytes", "8192", "--entry-bytes", "20",
                    "--n-items", "1000000000", "--format", "csv")
    assert code == 0
    header, (row,) = csv_rows(out)
    assert header[-1] == "height"
    assert float(row[-1]) == pytest.approx(3.66, abs=0.01)
    code, out = run("indexsize", "--candidates",
                    ",".join(str(k * 1024) for k in (2, 4, 8, 16, 32, 64, 128)),
                    "--entry-bytes", "20", "--format", "csv")
    header, rows = csv_rows(out)
    optimal = [r for r in rows if r[-1] == "yes"]
    assert len(optimal) == 1 and optimal[0][0] == "16384"
    assert run("indexsize")[0] == 2


def test_metrics_table8_csv():
    code, out = run("metrics", "--table8", "--format", "csv")
    assert code == 0
    header, rows = csv_rows(out)
    assert header == ["metric", "table8_ram", "table8_disk", "table8_tape_robot"]
    table = {r[0]: [float(x) for x in r[1:]] for r in rows}
    assert table["kaps"][1] == pytest.approx(98.0, abs=0.1)
    assert table["maps"][1] == pytest.approx(4.76, abs=0.01)
    assert table["scan_s"] == pytest.approx([2, 1800, 98420])
    assert table["dollars_per_tbscan"][0] == pytest.approx(0.317, abs=0.001)
    assert table["dollars_per_tbscan"][1] == pytest.approx(4.23, abs=0.01)
    assert table["dollars_per_tbscan"][2] == pytest.approx(21.23, abs=0.05)


def test_metrics_table8_table_mode_flags_tape_discrepancy():
    code, out = run("metrics", "--table8")
    assert code == 0
    assert "note:" in out and "296" in out


def test_metrics_single_device():
    code, out = run("metrics", "--device", "table8_disk", "--format", "csv")
    assert code == 0
    header, (row,) = csv_rows(out)
    assert header[0] == "device" and row[0] == "table8_disk"
    assert run("metrics")[0] == 2


def test_presets_listing():
    code, out = run("presets", "--format", "csv")
    assert code == 0
    header, rows = csv_rows(out)
    assert header[0] == "name"
    names = {r[0] for r in rows}
    assert {"dell_tpcc_1997", "table8_ram", "table8_disk",
            "table8_tape_robot", "table4_dlt_robot"} <= names


def test_gen_trace_and_simulate_round_trip(tmp_path):
    trace_path = tmp_path / "trace.csv"
    code, _ = run("gen-trace", "--seed", "3", "--ops", "500", "--pages", "40",
                  "--zipf-s", "0.8", "--write-fraction", "0.3",
                  "--ops-per-second", "25", "--out", str(trace_path))
    assert code == 0
    code, out = run("simulate", "--trace", str(trace_path), "--frames", "16",
                    "--policy", "clock2", "--n-seconds", "4",
                    "--checkpoint", "5", "--format", "csv")
    assert code == 0
    header, (row,) = csv_rows(out)
    assert header == ["logical", "physical", "hit_ratio", "evictions",
                      "contention_flushes", "checkpoint_flushes", "fallbacks"]
    assert row[0] == "500"


def test_gen_trace_stdout_is_byte_stable():
    argv = ["gen-trace", "--seed", "5", "--ops", "50", "--pages", "6"]
    assert run(*argv) == run(*argv)


def test_simulate_three_event_example(tmp_path):
    trace_path = tmp_path / "aba.csv"
    trace_path.write_text("time,page,op\n0,A,r\n1,B,r\n2,A,r\n", encoding="utf-8")
    code, out = run("simulate", "--trace", str(trace_path), "--frames", "1",
                    "--format", "csv")
    assert code == 0
    _, (row,) = csv_rows(out)
    assert row == ["3", "3", "0", "2", "0", "0", "0"]


def test_simulate_input_errors_exit_3(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("time,page,op\n5,A,r\n1,B,r\n", encoding="utf-8")
    assert run("simulate", "--trace", str(bad), "--frames", "2")[0] == 3
    garbled = tmp_path / "garbled.csv"
    garbled.write_text("nope\n", encoding="utf-8")
    assert run("simulate", "--trace", str(garbled), "--frames", "2")[0] == 3
    assert run("simulate", "--trace", str(tmp_path / "missing.csv"),
               "--frames", "2")[0] == 3


def test_simulate_config_errors_exit_2(tmp_path):
    trace_path = tmp_path / "t.csv"
    trace_path.write_text("time,page,op\n0,A,r\n", encoding="utf-8")
    assert run("simulate", "--trace", str(trace_path), "--frames", "0")[0] == 2
    assert main(["simulate", "--trace", str(trace_path)]) == 2  # --frames required


def test_csv_outputs_are_byte_stable():
    for argv in (["indexsize", "--table6", "--format", "csv"],
                 ["metrics", "--table8", "--format", "csv"],
                 ["breakeven", "--device", "dell_tpcc_1997", "--format", "csv"],
                 ["presets", "--format", "csv"]):
        assert run(*argv) == run(*argv)


def test_unknown_subcommand_exits_2():
    assert main(["frobnicate"]) == 2
