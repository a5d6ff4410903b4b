import io
import subprocess
import sys

from uast.cli import run
from uast.tables import dump_mapping_tsv


def run_cli(args, stdin: bytes = b""):
    out = io.BytesIO()
    err = io.StringIO()
    code = run(args, io.BytesIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_uast_io_to_iast_stdin_stdout():
    code, out, err = run_cli(["-f", "uast-io", "-t", "iast"], b"praj/n//a/\n")
    assert (code, out, err) == (0, "prajñā\n".encode(), "")


def test_empty_input():
    code, out, err = run_cli(["-f", "iast", "-t", "iast"], b"")
    assert (code, out, err) == (0, b"", "")


def test_strict_error_diagnostic_format_and_exit_code():
    code, out, err = run_cli(["-f", "uast-io", "-t", "iast"], b"/zz/\n")
    assert code == 1
    assert out == b""
    assert err == "1:1: unknown-key: /zz/\n"


def test_failed_line_is_dropped_but_conversion_continues():
    code, out, err = run_cli(
        ["-f", "uast-io", "-t", "iast"], b"r/a/ma/h/\n/zz/\nk/r//sl//nl/a/h/\n"
    )
    assert code == 1
    assert out == "rāmaḥ\nkṛṣṇaḥ\n".encode()
    assert err == "2:1: unknown-key: /zz/\n"


def test_lenient_flag():
    code, out, err = run_cli(["-f", "uast-io", "-t", "iast", "--lenient"], b"/zz/\n")
    assert (code, out, err) == (0, b"/zz/\n", "")


def test_trailing_newline_preserved_iff_present():
    code, out, _ = run_cli(["-f", "uast", "-t", "iast"], b"kamala")
    assert (code, out) == (0, b"kamala")
    code, out, _ = run_cli(["-f", "uast", "-t", "iast"], b"kamala\n")
    assert (code, out) == (0, b"kamala\n")


def test_long_form_flags():
    code, out, _ = run_cli(["--from", "uast", "--to", "devanagari"], b"kml\n")
    assert (code, out) == (0, "कमल\n".encode())


def test_unknown_scheme_is_usage_error():
    code, _, err = run_cli(["-f", "slp1", "-t", "iast"], b"")
    assert code == 2
    assert "slp1" in err or "invalid choice" in err


def test_missing_scheme_flags_is_usage_error():
    code, _, err = run_cli(["-f", "uast"], b"")
    assert code == 2


def test_invalid_utf8_aborts_with_byte_offset():
    code, out, err = run_cli(["-f", "iast", "-t", "iast"], b"ab\n\xffcd\n")
    assert code == 1
    assert "byte 3" in err


def test_dump_tables():
    code, out, err = run_cli(["--dump-tables"])
    assert code == 0
    assert out.decode("utf-8") == dump_mapping_tsv()
    lines = out.decode("utf-8").splitlines()
    assert len(lines) == 18
    assert lines[0] == "a\t0101\tā\tआ"


def test_file_io(tmp_path):
    src = tmp_path / "in.txt"
    dst = tmp_path / "out.txt"
    src.write_bytes("r/a/ma/h/\n".encode())
    code, out, err = run_cli(
        ["-f", "uast-io", "-t", "devanagari", "-i", str(src), "-o", str(dst)]
    )
    assert (code, out, err) == (0, b"", "")
    assert dst.read_bytes() == "रामः\n".encode()


def test_missing_input_file():
    code, _, err = run_cli(["-f", "iast", "-t", "iast", "-i", "/nonexistent/path"])
    assert code == 1
    assert err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "uast", "-f", "uast-io", "-t", "iast"],
        input=b"k/r//sl//nl/a/h/\n",
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "kṛṣṇaḥ\n".encode()


def test_console_output_is_byte_exact_utf8():
    code, out, _ = run_cli(["-f", "uast", "-t", "devanagari"], b"p/u/r-v/i/\n")
    assert out == "पूर्वी\n".encode("utf-8")


def test_crlf_line_endings_survive():
    code, out, _ = run_cli(["-f", "uast", "-t", "iast"], b"kamala\r\nnala\r\n")
    assert (code, out) == (0, b"kamala\r\nnala\r\n")
