"""Running the inequality registry.

Every verifiable statement lives in a registry keyed by a short case id.
A check builds the Hermitian slack object the statement asserts to be PSD
(or a spectrum pair, or an exact integer gap) and reports the decisive
witness: minimum slack eigenvalue, worst prefix-sum gap, and so on.
"""

from blocktrace import REGISTRY, RunConfig, check_case, make_instance, run_suite

# one case on one instance: the slack eigenvalue tells how comfortably
# the inequality held
a = make_instance("ando", m=3, n=3, seed=7)
report = check_case("ando", a)
print(f"ando on a random 3x3-block PSD instance: holds={report.holds}, "
      f"min slack eigenvalue={report.witness:.4f}")

# multi-part cases report one witness per sub-statement
report = check_case("li-liu-huang-pm", make_instance("li-liu-huang-pm", 2, 4, 1))
for part in report.parts:
    print(f"  li-liu-huang-pm [{part.label}]: witness={part.witness:.4f}")

# the expected-failure case inverts the convention: it holds when the
# violation is detected, pinning the counterexample to its exact depth -1
bad = make_instance("psi-not-2-positive", 2, 3, 0)
report = check_case("psi-not-2-positive", bad)
print(f"counterexample case: violation found={report.holds}, "
      f"witness={report.witness:.1f} (exactly -1)")

# a small sweep over the whole registry
config = RunConfig(tuple(REGISTRY), dims=((2, 2), (2, 3), (3, 3)),
                   trials=30, seed=42)
suite = run_suite(config)
failures = sum(e["failures"] for e in suite["cases"].values())
print(f"\n{len(REGISTRY)} cases x {config.trials} trials: {failures} failures")
worst = min(suite["cases"].items(),
            key=lambda kv: kv[1]["worst_witness"] or 0.0)
print(f"tightest case: {worst[0]} with witness {worst[1]['worst_witness']:.3g} "
      f"at dims {worst[1]['worst_dims']}")
