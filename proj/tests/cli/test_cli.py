"""Black-box checks of the cogrowth command-line tool.

Usage: test_cli.py <path-to-cogrowth> <schema-dir>

Runs the documented examples, checks exit codes, determinism and validates
every JSON output against the shipped schemas.
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SCHEMAS = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("COGROWTH_ORACLE_MAX_N", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True,
                          env=full_env, timeout=600)


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


class SeriesCommand(unittest.TestCase):
    def test_free_abelian_cogrowth(self):
        r = run("series", "--N", "1", "--M", "1", "--order", "6", "--q0")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "1,0,4,0,36,0,400")

    def test_order_zero(self):
        r = run("series", "--N", "2", "--M", "2", "--order", "0")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "0: 1")
        r = run("series", "--N", "2", "--M", "2", "--order", "0", "--q0")
        self.assertEqual(r.stdout.strip(), "1")

    def test_matches_oracle(self):
        r = run("series", "--N", "2", "--M", "3", "--order", "8", "--q0")
        self.assertEqual(r.returncode, 0, r.stderr)
        series = [int(x) for x in r.stdout.strip().split(",")]
        o = run("oracle", "--N", "2", "--M", "3", "--nmax", "8", "--family", "g")
        self.assertEqual(o.returncode, 0, o.stderr)
        lines = o.stdout.strip().splitlines()
        self.assertEqual(lines[0], "n,k,count")
        table = {}
        for line in lines[1:]:
            n, k, c = line.split(",")
            table[(int(n), int(k))] = int(c)
        self.assertEqual(series, [table.get((n, 0), 0) for n in range(9)])

    def test_default_orders(self):
        r = run("series", "--N", "2", "--M", "2", "--q1", "--output", "json")
        self.assertEqual(json.loads(r.stdout)["order"], 24)
        r = run("series", "--N", "2", "--M", "1", "--q1", "--output", "json")
        self.assertEqual(json.loads(r.stdout)["order"], 16)

    def test_json_schemas(self):
        for mode in ("--q0", "--q1", "--symbolic"):
            for gf in ("G", "L", "K"):
                r = run("series", "--N", "2", "--M", "3", "--order", "6",
                        "--gf", gf, mode, "--output", "json")
                self.assertEqual(r.returncode, 0, r.stderr)
                jsonschema.validate(json.loads(r.stdout), schema("series"))

    def test_csv(self):
        r = run("series", "--N", "1", "--M", "1", "--order", "2", "--output", "csv")
        self.assertEqual(r.stdout.splitlines(),
                         ["n,k,count", "0,0,1", "1,-1,1", "1,1,1",
                          "2,-2,1", "2,0,4", "2,2,1"])

    def test_conflicting_modes(self):
        r = run("series", "--N", "1", "--M", "1", "--q0", "--q1")
        self.assertEqual(r.returncode, 2)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "s.txt")
            r = run("series", "--N", "1", "--M", "1", "--order", "4", "--q0",
                    "--out", path)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertEqual(r.stdout, "")
            with open(path) as f:
                self.assertEqual(f.read().strip(), "1,0,4,0,36")


class OracleCommand(unittest.TestCase):
    def table(self, *args):
        r = run("oracle", *args)
        self.assertEqual(r.returncode, 0, r.stderr)
        return r.stdout.strip().splitlines()

    def test_g20(self):
        self.assertIn("2,0,4", self.table("--N", "2", "--M", "2", "--nmax", "6",
                                          "--family", "g"))

    def test_free_abelian_g80(self):
        self.assertIn("8,0,4900", self.table("--N", "1", "--M", "1", "--nmax", "8",
                                             "--family", "g"))

    def test_reduced_family(self):
        lines = self.table("--N", "2", "--M", "2", "--nmax", "8", "--family", "d")
        self.assertEqual(lines[0], "n,count")
        self.assertEqual(len(lines), 10)
        self.assertEqual(lines[1], "0,1")

    def test_guard(self):
        r = run("oracle", "--N", "2", "--M", "2", "--nmax", "20")
        self.assertEqual(r.returncode, 2)
        self.assertIn("guard", r.stderr)
        r = run("oracle", "--N", "1", "--M", "1", "--nmax", "16",
                env={"COGROWTH_ORACLE_MAX_N": "16"})
        self.assertEqual(r.returncode, 0, r.stderr)

    def test_json_schema(self):
        for fam in ("g", "l", "k", "d"):
            r = run("oracle", "--N", "2", "--M", "1", "--nmax", "6",
                    "--family", fam, "--output", "json")
            self.assertEqual(r.returncode, 0, r.stderr)
            jsonschema.validate(json.loads(r.stdout), schema("oracle"))


class PolyVerifyRate(unittest.TestCase):
    def test_poly_bs22(self):
        r = run("poly", "--N", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(
            r.stdout.strip(),
            "1 + 3*G*z*Q - 1*G^2 + 4*G^2*z^2 + 1*G^2*z^2*Q^2 - 1*G^3*z*Q"
            " + 2*G^3*z^2*Q^2 + 4*G^3*z^3*Q - 1*G^3*z^3*Q^3")

    def test_poly_json(self):
        r = run("poly", "--N", "3", "--output", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("poly"))
        self.assertEqual(doc["degree_G"], 4)

    def test_poly_cap(self):
        self.assertEqual(run("poly", "--N", "9").returncode, 2)

    def test_verify(self):
        r = run("verify", "--N", "3", "--order", "16")
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        r = run("verify", "--N", "2", "--order", "10", "--q", "1/3")
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        self.assertEqual(run("verify", "--N", "2", "--q", "x").returncode, 2)

    def test_rate_discriminant(self):
        r = run("rate", "--N", "2", "--method", "discriminant")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("rate"))
        self.assertAlmostEqual(doc["mu"], 3.792765039, delta=5e-9)
        t = run("rate", "--N", "2", "--output", "text")
        self.assertTrue(t.stdout.startswith("mu=3.79276503"), t.stdout)

    def test_rate_ratio(self):
        r = run("rate", "--N", "3", "--method", "ratio", "--order", "24")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("rate"))
        self.assertAlmostEqual(doc["mu"], 3.647639445, delta=0.02 * 3.647639445)

    def test_rate_errors(self):
        self.assertEqual(run("rate", "--N", "7").returncode, 2)
        self.assertEqual(run("rate", "--N", "2", "--method", "guess").returncode, 2)


class General(unittest.TestCase):
    def test_exit_codes(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("nonsense").returncode, 2)
        self.assertEqual(run("series", "--N", "0", "--M", "1").returncode, 2)
        self.assertEqual(run("series", "--N", "1").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)

    def test_deterministic(self):
        for args in (("series", "--N", "2", "--M", "3", "--order", "8",
                      "--output", "json"),
                     ("oracle", "--N", "3", "--M", "2", "--nmax", "8"),
                     ("poly", "--N", "4", "--output", "json"),
                     ("rate", "--N", "3")):
            a, b = run(*args), run(*args)
            self.assertEqual(a.returncode, 0, a.stderr)
            self.assertEqual(a.stdout, b.stdout)


if __name__ == "__main__":
    CLI = os.path.abspath(sys.argv[1])
    SCHEMAS = os.path.abspath(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
