"""The on-disk format and the command-line interface.

Automata serialize to a small JSON document whose numbers are all "p/q"
strings, so files round-trip exactly.  The same operations are available
from the qfaeq command; this script drives it through subprocess the way
a shell user would.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from qfaeq import (
    Alphabet,
    always_accept_qfa,
    last_letter_qfa,
    parse_qfa,
    serialize_qfa,
)

# Serialize, reread, compare: the document is byte-stable and lossless.
ll = last_letter_qfa()
text = serialize_qfa(ll)
print("document for the last-letter automaton:")
print(text)
back = parse_qfa(text)
print("round-trip equal:", back == ll)
print("re-serialized byte-identical:", serialize_qfa(back) == text)

# Now the CLI on the same two automata.
workdir = Path(tempfile.mkdtemp())
ll_path = workdir / "last_letter.json"
aa_path = workdir / "always.json"
ll_path.write_text(text)
aa_path.write_text(serialize_qfa(always_accept_qfa(Alphabet("ab"))))


def run(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "qfaeq.cli", *args],
        capture_output=True, text=True,
    )
    print(f"$ qfaeq {' '.join(args)}")
    print((proc.stdout + proc.stderr).rstrip())
    print(f"(exit {proc.returncode})\n")
    return proc.returncode


run("validate", str(ll_path))
run("prob", str(ll_path), "abab")
run("bound", str(ll_path), str(aa_path))

# Exit code 1 signals a confirmed difference; the report names the first
# word (in length-then-alphabet order) flagged by the search.
run("equiv", str(ll_path), str(aa_path))
run("equiv", "--method", "bruteforce", "--max-len", "6",
    str(ll_path), str(aa_path))

# Malformed input is a usage error, exit code 2.
bad = workdir / "bad.json"
bad.write_text(text.replace('"_a"', '"a_"'))
run("validate", str(bad))
