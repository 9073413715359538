window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#how-this-book-is-organized","model.html#sets-volume-and-perimeter","model.html#complement-perimeter","model.html#the-two-minima","model.html#elementary-inequalities","decomposition.html#the-triangular-decomposition","decomposition.html#the-g-orbit-collapses-doubly-fast","decomposition.html#the-supported-range","engines.html#three-engines","engines.html#the-oracle","engines.html#the-dp-engine","engines.html#the-fast-engine","engines.html#who-checks-whom","exceptions.html#the-exception-table","exceptions.html#the-data","exceptions.html#loading-is-validation","exceptions.html#overriding-the-table","verification.html#the-verification-harness","verification.html#the-bound-catalog","verification.html#the-one-irrational-bound","verification.html#window-reflection-asymptotics","verification.html#drift-series","verification.html#what-runs-when","cli.html#the-command-line","cli.html#compute","cli.html#table-and-b-files","cli.html#verify","cli.html#exceptions","cli.html#bounds-triangle-plotdata-phi"],"index":{"documentStore":{"docInfo":{"0":{"body":183,"breadcrumbs":2,"title":1},"1":{"body":58,"breadcrumbs":3,"title":2},"10":{"body":90,"breadcrumbs":3,"title":1},"11":{"body":226,"breadcrumbs":4,"title":2},"12":{"body":109,"breadcrumbs":4,"title":2},"13":{"body":64,"breadcrumbs":3,"title":1},"14":{"body":53,"breadcrumbs":4,"title":2},"15":{"body":87,"breadcrumbs":3,"title":1},"16":{"body":204,"breadcrumbs":4,"title":2},"17":{"body":31,"breadcrumbs":4,"title":2},"18":{"body":34,"breadcrumbs":4,"title":2},"19":{"body":100,"breadcrumbs":4,"title":2},"2":{"body":112,"breadcrumbs":6,"title":3},"20":{"body":110,"breadcrumbs":5,"title":3},"21":{"body":147,"breadcrumbs":5,"title":3},"22":{"body":50,"breadcrumbs":4,"title":2},"23":{"body":36,"breadcrumbs":3,"title":1},"24":{"body":58,"breadcrumbs":4,"title":2},"25":{"body":44,"breadcrumbs":3,"title":1},"26":{"body":66,"breadcrumbs":5,"title":3},"27":{"body":82,"breadcrumbs":3,"title":1},"28":{"body":74,"breadcrumbs":3,"title":1},"29":{"body":110,"breadcrumbs":6,"title":4},"3":{"body":58,"breadcrumbs":5,"title":2},"4":{"body":25,"breadcrumbs":5,"title":2},"5":{"body":102,"breadcrumbs":5,"title":2},"6":{"body":170,"breadcrumbs":4,"title":2},"7":{"body":122,"breadcrumbs":7,"title":5},"8":{"body":43,"breadcrumbs":4,"title":2},"9":{"body":18,"breadcrumbs":4,"title":2}},"docs":{"0":{"body":"Take a finite set A of nonnegative integers. Its volume is the sum of\\nits elements, and its perimeter is the sum of its boundary elements —\\nthose members of A with a missing neighbor on at least one side. The\\ndiscrete isoperimetric problem on {0, 1, 2, …} asks: among all sets of\\nvolume n, how small can the perimeter be? Two functions answer it: P(n) — the minimum perimeter over all sets of volume n\\n(OEIS A186053), Q(n) — the minimum perimeter of the complement, over the same sets. Both functions grow like √(2n) but neither is monotone; they oscillate\\ninside a narrow band above √(2n), and the pattern of their oscillation is\\nself-similar in a precise sense made visible by a triangular rearrangement\\n(see The triangular decomposition). This crate computes both functions three independent ways and makes the\\nengines check one another: an oracle that enumerates every volume- n set (exact by\\nconstruction, exponential, capped at small n), a DP engine implementing the helper-table recurrences with windowed,\\nrun-length-compressed storage (quadratic memory, exact for any n the\\ntable covers), a fast engine running the Theorem 6.5 identity recursion seeded by a\\n177-row exception table (microseconds per query, valid up to 4 × 10¹⁷). A verify harness re-proves every published inequality, window, reflection\\nand asymptotic claim as an executable check over ranges of n. A first taste: #![allow(unused)] fn main() {\\nuse isoperim::fast_engine::{fast_p, fast_q, ExceptionTable}; let exc = ExceptionTable::embedded();\\nassert_eq!(fast_p(29, exc), 14);\\nassert_eq!(fast_q(29, exc), 15); // One trillion: still exact, still instant.\\nassert_eq!(fast_p(1_000_000_000_000, exc), 1_415_844); } The same values from the shell: $ isoperim compute 29\\nengine: fast\\nP=14 Q=15","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"Sets, volume, and perimeter fixes the objects and the two\\nboundary notions. The triangular decomposition builds\\nthe f/ g machinery everything else runs on. Three engines\\nwalks through the oracle, the DP and the fast recursion. The exception table covers the 177 rows where the identity\\nrecursion needs stored answers, and how the table is validated and\\nregenerated. The verification harness catalogs every\\nbound the crate can check. The command line tours the isoperim\\nbinary. Every Rust snippet in this book is compiled and executed by cargo test;\\nthe examples cannot drift from the library.","breadcrumbs":"Introduction » How this book is organized","id":"1","title":"How this book is organized"},"10":{"body":"oracle enumerates every volume- n set and takes the minimum — exact by\\nconstruction, with nothing to get subtly wrong. A volume- n set is a\\npartition of n into distinct positive parts, plus an independent choice\\nof whether 0 is a member, so the enumeration is a depth-first search over\\ndistinct parts in descending order, each result yielded twice (with and\\nwithout 0): #![allow(unused)] fn main() {\\nuse isoperim::oracle::{brute_p, brute_q, count_distinct_partitions, enumerate_volume_sets}; // Partitions of 3 into distinct parts: 3 and 1+2 → four sets.\\nlet sets: Vec<_> = enumerate_volume_sets(3).unwrap().collect();\\nassert_eq!(sets.len() as u64, 2 * count_distinct_partitions(3)); assert_eq!(brute_p(12).unwrap(), 8);\\nassert_eq!(brute_q(12).unwrap(), 8); } The number of candidates grows like exp(c√n), so the oracle refuses n > 70 ( DEFAULT_CEILING) unless you raise the cap explicitly with enumerate_volume_sets_capped. Its entire role is to anchor the other\\nengines on the range where exhaustive search is feasible.","breadcrumbs":"Three engines » The oracle","id":"10","title":"The oracle"},"11":{"body":"dp_engine implements the three helper minima restricted to subsets of {0, …, k}: p(n; k) — minimum perimeter, q(n; k) — minimum complement perimeter, σ(n; k) — minimum complement perimeter requiring k ∈ A. Each row n only needs the window f(n) ≤ k ≤ n: below f(n) no set of\\nvolume n fits inside {0, …, k} (the value is ∞, Lemma 6.1), and above n the values are constant. The recurrences walk each row once, so\\nbuilding every row up to N costs O(N²) time and — the real constraint — O(N²) bytes. Two storage decisions keep that honest: p and q rows are nearly constant and run-length encode to a handful\\nof linear runs per row; σ rows are jagged and do not compress under that scheme, so the builder\\nstores them plain rather than pretending. Net effect: about 2N² bytes\\ntotal, a third of the naive all-plain layout. Builds go through a memory budget (default 6 GiB) and fail with a sizing\\nerror instead of an OOM kill: #![allow(unused)] fn main() {\\nuse isoperim::dp_engine::{build_helper_tables_with_budget, compute_pq_range}; // A budget too small for N = 2000 is rejected up front.\\nassert!(build_helper_tables_with_budget(2000, 1 << 20).is_err()); // The end-user view: a table of P and Q values.\\nlet vt = compute_pq_range(60).unwrap();\\nassert_eq!(vt.p(29), 14);\\nassert_eq!(vt.q(29), 15); } The helper tables expose the structure the verification suite leans on —\\nthe ∞ law below the window, monotonicity of p(n; ·), and the boundary\\nidentity σ(n; n) = 2n: #![allow(unused)] fn main() {\\nuse isoperim::dp_engine::build_helper_tables; let t = build_helper_tables(30).unwrap();\\nassert_eq!(t.sigma(5, 5).expect_finite(\\"σ(5;5)\\"), 10);\\nassert!(!t.p(5, 2).is_finite()); // below the window: f(5) = 3\\nassert_eq!(t.p_of(29), 14); } A second DP path, the direct engine, evaluates the standalone\\nrecurrences for P(n) and Q(n) — equations (6) and (7) — by scanning\\ncandidate maxima m with a pruning cutoff. It shares the helper tables but\\nnot the extraction logic, which makes it a genuinely different derivation\\nof the same numbers: #![allow(unused)] fn main() {\\nuse isoperim::dp_engine::{build_helper_tables, direct_p, direct_q}; let t = build_helper_tables(100).unwrap();\\nassert_eq!(direct_p(29, &t, None).unwrap(), 14);\\nassert_eq!(direct_q(29, &t, None).unwrap(), 15); }","breadcrumbs":"Three engines » The DP engine","id":"11","title":"The DP engine"},"12":{"body":"fast_engine computes single values in O(φ(n)) arithmetic operations —\\nat most three table probes anywhere in the supported range — using the\\nTheorem 6.5 identities P(n) = f(n) + Q(g(n)), Q(n) = 1 + f(n) + P(g(n)) which hold for all but 177 exceptional n, every one of them at most 149,894. The engine recurses n → g(n) until it lands at or below that\\nhorizon, then answers from the exception table (stored values at exception\\nkeys; the identities themselves below the horizon otherwise). The next chapter covers the table in detail. #![allow(unused)] fn main() {\\nuse isoperim::fast_engine::{fast_p, fast_q, ExceptionTable}; let exc = ExceptionTable::embedded();\\nassert_eq!(fast_p(1_000_000_000_000, exc), 1_415_844);\\nassert_eq!(fast_q(1_000_000_000_000, exc), 1_415_845); } A fourth derivation, the quasi-explicit formula of Proposition 6.7,\\nunrolls the recursion into a closed form with an even/odd case split on φ(n) — alternating f-terms with a stored value at the orbit’s end: #![allow(unused)] fn main() {\\nuse isoperim::fast_engine::{fast_p, quasi_explicit_p, ExceptionTable}; let exc = ExceptionTable::embedded();\\nfor n in [92, 149_895, 10_000_000_000] { assert_eq!(quasi_explicit_p(n, exc), fast_p(n, exc));\\n} }","breadcrumbs":"Three engines » The fast engine","id":"12","title":"The fast engine"},"13":{"body":"check range criterion oracle = dp n ≤ 60 1 dp = published rows n ≤ 2000 2 fast = dp n ≤ 2000 exhaustive 4 direct = dp 2 ≤ n ≤ 2000 4 quasi-explicit = fast 10⁵ samples ≤ 10¹² 4 The oracle validates the DP on the small range, the DP validates the fast\\nengine on the mid range, and the fast engine — now trusted — carries the\\nbound checks out to 10⁶ and the asymptotic probes out to 10¹². Every arrow\\nin that chain is an acceptance criterion and runs in cargo test.","breadcrumbs":"Three engines » Who checks whom","id":"13","title":"Who checks whom"},"14":{"body":"The Theorem 6.5 identities are the whole fast engine — so the finitely many n where they fail have to be known exactly, stored exactly, and loaded\\nparanoidly. An exception is an n where at least one identity misses: p-exception: P(n) ≠ f(n) + Q(g(n))\\nq-exception: Q(n) ≠ 1 + f(n) + P(g(n)) There are 177 exceptional n, the largest being 149,894 — the exception horizon. Above the horizon the identities always hold, which\\nis what makes the recursion terminate correctly; at or below it, the engine\\nconsults the table.","breadcrumbs":"The exception table » The exception table","id":"14","title":"The exception table"},"15":{"body":"The table ships inside the crate as a CSV with one row per exceptional n: n,P,Q,p_exc,q_exc\\n0,0,0,0,1\\n2,2,4,1,0\\n4,4,6,1,0\\n7,6,7,1,0 p_exc and q_exc record which identity fails; rows store both values\\nso the engine never mixes a stored number with a derived one at the same\\nkey. Row 0 is the seed: P(0) = Q(0) = 0 by the empty set, but the\\nq-identity would claim Q(0) = 1 + f(0) + P(0) = 1, so n = 0 is a\\nq-exception and the table is how the recursion knows it. #![allow(unused)] fn main() {\\nuse isoperim::fast_engine::ExceptionTable; let exc = ExceptionTable::embedded();\\nlet stats = exc.stats();\\nassert_eq!(stats.rows, 177);\\nassert_eq!(stats.rows_with_failure, 177); // every row earns its place\\nassert_eq!(stats.failing_flags, 253); // 76 rows fail both identities\\nassert_eq!(exc.max_n(), 149_894); let rec = exc.get(29).unwrap();\\nassert_eq!((rec.p, rec.q), (14, 15)); }","breadcrumbs":"The exception table » The data","id":"15","title":"The data"},"16":{"body":"load_exception_table treats its input as hostile and checks, in order: the exact header n,P,Q,p_exc,q_exc, and strictly increasing keys; every key within the horizon, with the two anchor rows present and\\nexact: (0, 0, 0) and (149894, 596, 596); per-row sanity 0 ≤ Q − P ≤ 2 (every genuine exception row lies in\\nthat band, a strict sub-band of the global window); flag cross-validation: it recomputes both identities for every row\\nfrom the stored values themselves — evaluating P and Q at g(n) by\\nrecursing through the table being loaded — and requires the recomputed\\nfailure pattern to equal the stored p_exc/ q_exc bits. Step 4 is the strong one: a flipped flag, a deleted row, or an edited value\\nthat breaks any other row’s identity arithmetic cannot load. The embedded\\nbytes are additionally pinned by a checksum in the test suite. What\\nvalidation cannot catch — by design — is a consistent lie about a value no\\nother row depends on; catching that is the verification harness’s job\\n(criteria 2 and 3), which rederives the table from the DP engine: #![allow(unused)] fn main() {\\nuse isoperim::analysis::{compare_exceptions, regenerate_exceptions};\\nuse isoperim::dp_engine::compute_pq_range;\\nuse isoperim::fast_engine::ExceptionTable; let dp = compute_pq_range(300).unwrap();\\nlet regenerated = regenerate_exceptions(&dp);\\nlet report = compare_exceptions(&regenerated, ExceptionTable::embedded(), 300);\\nassert!(report.pass); // same keys, same values, same flags, both directions } regenerate_exceptions recomputes the failure flags for every n the\\ntable covers and keeps the rows where at least one identity fails; compare_exceptions then diffs both directions — a missing exception, an\\nextra one, or any value/flag mismatch is a violation. The desk-scale test\\nruns this to n = 2000 (14 rows); extended mode repeats it at N = 25,000, which covers 135 of the 177 rows — every key up to 24,598.\\nReproducing the remaining 42 rows, and certifying that none exist beyond\\nthe horizon, is the §7-scale computation (a DP sweep past 2,500,000) that\\nthe test suite deliberately leaves to a dedicated machine.","breadcrumbs":"The exception table » Loading is validation","id":"16","title":"Loading is validation"},"17":{"body":"Every CLI command accepts --exceptions-file PATH (or the ISOPERIM_EXCEPTIONS environment variable; the flag wins) to load a\\nreplacement table. The same validation applies, so the override is useful\\nfor exactly two things: testing the loader, and demonstrating that the\\nverification suites catch tampering that the loader provably cannot.","breadcrumbs":"The exception table » Overriding the table","id":"17","title":"Overriding the table"},"18":{"body":"analysis turns every proved statement about P and Q into an\\nexecutable check. The suites return a BoundReport — a list of Violation { n, bound, lhs, rhs } records and a pass flag that is true\\nexactly when the list is empty. Nothing is sampled unless the statement\\nitself is asymptotic; everything else is exhaustive over its range.","breadcrumbs":"The verification harness » The verification harness","id":"18","title":"The verification harness"},"19":{"body":"For each n, bound_violations evaluates the full catalog against the\\nvalues P(n), Q(n), P(g(n)), Q(g(n)): name statement arithmetic prop3.2 √(2n) − ½ ≤ P(n) exact: 8n ≤ (2P+1)² prop3.4 √(2n) + ½ ≤ Q(n) exact: 8n ≤ (2Q−1)² cor5.2_P/Q f ≤ P(n), f+1 ≤ Q(n) integer compare thm5.5_P/Q P ≤ f + Q(g), Q ≤ 1 + f + P(g) integer compare thm6.4_P/Q lower bounds on P−f, Q−1−f via min{…, √(2s)+c} exact squared predicates, s = g+f+1 thm5.6_lower_P/Q strict √(2n) lower envelopes for n > 2 exact squared predicates thm5.6_upper_P/Q ≤ √(2n) + (2^¾ n^¼ + 1)(log₂log₂(n/2) − 1) + 7 certified intervals #![allow(unused)] fn main() {\\nuse isoperim::analysis::{check_bounds, check_bounds_at};\\nuse isoperim::fast_engine::{fast_table, ExceptionTable}; let exc = ExceptionTable::embedded();\\nlet report = check_bounds(&fast_table(10_000, exc));\\nassert!(report.pass); // Point checks reach any n the fast engine accepts.\\nassert!(check_bounds_at(10_000_000_000, exc).is_empty()); }","breadcrumbs":"The verification harness » The bound catalog","id":"19","title":"The bound catalog"},"2":{"body":"The universe is {0, 1, 2, …}. A set is a finite collection of distinct\\nnonnegative integers, represented by IntSet as a sorted vector;\\nconstruction validates sortedness and distinctness once, and everything\\ndownstream relies on it. For a finite A: volume: vol(A) = Σ_{z ∈ A} z, boundary: ∂A = {z ∈ A : {z−1, z+1} ⊄ A} — members with a missing\\nneighbor (for z = 0, the left neighbor −1 is always missing), perimeter: per(A) = Σ_{z ∈ ∂A} z. #![allow(unused)] fn main() {\\nuse isoperim::set_model::IntSet; let a = IntSet::new(vec![0, 1, 2]).unwrap();\\nassert_eq!(a.volume(), 3);\\n// 0 and 2 are boundary (each misses a neighbor); 1 is interior.\\nassert_eq!(a.boundary().elements(), &[0, 2]);\\nassert_eq!(a.perimeter(), 2); // Dropping 0 exposes 1: now every element is boundary.\\nlet b = IntSet::new(vec![1, 2]).unwrap();\\nassert_eq!(b.perimeter(), 3); } That last contrast is why the element 0 is a first-class citizen here: it\\nnever contributes to a perimeter sum (its value is zero), but its presence\\nchanges which neighbors count as boundary. P(3) = 2 is achieved only by {0, 1, 2}; every volume-3 set without 0 has perimeter at least 3.","breadcrumbs":"Sets, volume, and perimeter » Sets, volume, and perimeter","id":"2","title":"Sets, volume, and perimeter"},"20":{"body":"Every bound but the last row of the table reduces to comparing integers — √ bounds become squared predicates. The Theorem 5.6 upper envelope does\\nnot: it mixes √(2n), n^¼, 2^¾ and a nested base-2 logarithm. The\\nharness evaluates it in fixed-point interval arithmetic (Q.30: i128\\nendpoints, 30 fractional bits) with directed rounding in every operation: square roots via integer isqrt on shifted u128s, floor for the lower\\nendpoint, +1 for the upper; log₂ by 30 shift-and-square iterations, each walk rounding toward its\\nendpoint, the upper walk paying one extra ulp for the truncated binary\\ntail; the constant 2^¾ as the one-ulp interval [1805811301, 1805811302]·2⁻³⁰,\\ncertified by an integer quartic inequality at compile-test time. A value passes only when it is ≤ the interval’s lower endpoint and\\nfails only when it is > the upper one. The in-between band — never\\nobserved; the slack of the bound is enormous compared to interval widths —\\nwould be reported as a violation rather than silently passed: the check is\\nconservative in exactly one direction.","breadcrumbs":"The verification harness » The one irrational bound","id":"20","title":"The one irrational bound"},"21":{"body":"Three more suites cover the statements that are not per- n inequalities. Window (Corollary 6.10): −1 ≤ Q(n) − P(n) ≤ 2 for every n. #![allow(unused)] fn main() {\\nuse isoperim::analysis::check_window;\\nuse isoperim::fast_engine::{fast_table, ExceptionTable}; assert!(check_window(&fast_table(50_000, ExceptionTable::embedded())).pass); } Triangle and reflection: arranging P(n) − f(n) in rows of constant f makes the self-similarity concrete — row r read right-to-left is Q(0), Q(1), … except at flagged exceptions, which is the Theorem 6.5\\nidentity restated row-wise ( n = T_r − g walks g = 0, 1, … from the row\\nend). check_row_reflection replays that per entry, skipping an entry\\nexactly when its identity flag is set: #![allow(unused)] fn main() {\\nuse isoperim::analysis::{check_row_reflection, triangle, TriangleSeries, TriangleValue};\\nuse isoperim::fast_engine::{fast_table, ExceptionTable};\\nuse isoperim::numeric_core::triangular; let exc = ExceptionTable::embedded();\\nlet vt = fast_table(triangular(11), exc); let tri = triangle(TriangleSeries::PMinusF, 12, &vt);\\nassert_eq!(tri.rows[3], vec![ TriangleValue::Scalar(1), // P(4) − f(4) = 4 − 3 TriangleValue::Scalar(2), // P(5) − f(5) = 5 − 3 TriangleValue::Scalar(0), // P(6) − f(6) = 3 − 3\\n]); assert!(check_row_reflection(12, &vt, exc).pass); } Asymptotics: P(n) ∼ √(2n) is a limit, so the check is a property at\\nprobe points: P(n)/√(2n) must exceed 0.99 (exact: (100P)² > 9801·2n)\\nand stay under the Theorem 5.6 envelope. #![allow(unused)] fn main() {\\nuse isoperim::analysis::check_asymptotics;\\nuse isoperim::fast_engine::ExceptionTable; let probes = [10_000, 1_000_000, 100_000_000];\\nassert!(check_asymptotics(&probes, ExceptionTable::embedded()).pass); }","breadcrumbs":"The verification harness » Window, reflection, asymptotics","id":"21","title":"Window, reflection, asymptotics"},"22":{"body":"For plots, emit_drift_series streams n, value, drift CSV where drift is\\nthe bounded residue P(n) − f(n) (or Q(n) − f(n) − 1): the raw series\\ngrows like √(2n) while the drift stays in a thin band, which is the whole\\nvisual story of these functions. #![allow(unused)] fn main() {\\nuse isoperim::analysis::{emit_drift_series, DriftSeries};\\nuse isoperim::fast_engine::{fast_table, ExceptionTable}; let vt = fast_table(6, ExceptionTable::embedded());\\nlet mut csv = Vec::new();\\nemit_drift_series(&vt, DriftSeries::P, &mut csv).unwrap();\\nlet text = String::from_utf8(csv).unwrap();\\nassert!(text.starts_with(\\"n,value,drift\\\\n0,0,0\\\\n\\"));\\nassert!(text.ends_with(\\"6,3,0\\\\n\\")); }","breadcrumbs":"The verification harness » Drift series","id":"22","title":"Drift series"},"23":{"body":"cargo test runs the whole catalog at desk scale: bounds and window\\nexhaustively to 10⁶, structure to 10⁶, engine cross-checks to 2000,\\nasymptotic probes to 10¹². The same suites are callable from the CLI\\n( isoperim verify) against any range, so a larger machine can push the\\nexhaustive frontier without touching code.","breadcrumbs":"The verification harness » What runs when","id":"23","title":"What runs when"},"24":{"body":"The isoperim binary wraps the library in eight subcommands. Three global\\nconventions: stdout is data, stderr is commentary. Provenance lines like engine: fast go to stderr so pipes stay clean. --format text|csv|json|bfile selects the output shape where it\\nmakes sense; commands with one natural shape (like plotdata) ignore it,\\nand meaningless combinations (a b-file of two functions at once) are\\nusage errors. Exit codes: 0 success, 1 a computation or verification failure, 2 a usage error. Scripts can rely on the distinction.","breadcrumbs":"The command line » The command line","id":"24","title":"The command line"},"25":{"body":"$ isoperim compute 29\\nengine: fast\\nP=14 Q=15 $ isoperim compute 29 --fn P --engine brute\\nengine: oracle\\n14 $ isoperim compute 1000000000000 --format json\\n{\\"P\\":1415844,\\"Q\\":1415845,\\"engine\\":\\"fast\\",\\"n\\":1000000000000} All four engines are selectable; each refuses ranges it is not built for\\n(the oracle above 70, the quadratic-memory engines above what the memory\\nbudget covers, everything above 4 × 10¹⁷).","breadcrumbs":"The command line » compute","id":"25","title":"compute"},"26":{"body":"table tabulates 0 ≤ n ≤ max. The bfile format emits the two-column n value shape used for OEIS submissions ( --fn P reproduces A186053’s\\nb-file exactly): $ isoperim table --max 6 --fn P --format bfile\\n0 0\\n1 1\\n2 2\\n3 2\\n4 4\\n5 5\\n6 3 --cache PATH reuses a previous run when its engine and range match, and\\nrecomputes (with a note on stderr) when they do not. --jobs N controls\\nthe worker pool; results are bit-identical at any thread count.","breadcrumbs":"The command line » table and b-files","id":"26","title":"table and b-files"},"27":{"body":"The acceptance gate. With no flags it runs all nine suites at their\\ndefault scales — the same ranges the test suite pins — and fails the\\nprocess if any violation appears: $ isoperim verify\\ncross(brute,dp) (n ≤ 60): PASS\\ntable1 (n ≤ 2000): PASS\\nexceptions (n ≤ 2000): PASS\\nengines (n ≤ 2000): PASS\\nbounds (n ≤ 1000000): PASS\\nwindow (n ≤ 1000000): PASS\\nstructural (n ≤ 1000000): PASS\\nreflection (n ≤ 1953): PASS\\nasymptotics (n ≤ 1000000000000): PASS\\nverify: PASS Individual suites and ranges: --suite bounds --max 5000000, or a custom\\nengine pairing --cross fast,direct --max 3000. --format json emits the\\nviolation records machine-readably; the exit code is the contract either\\nway.","breadcrumbs":"The command line » verify","id":"27","title":"verify"},"28":{"body":"exceptions prints the exception table (text, CSV, or JSON) with its\\nstats footer, and --regenerate N rebuilds rows from the DP engine and\\ndiffs them against the loaded table: $ isoperim exceptions | tail -3 142881 582 582 0 1 149894 596 596 0 1\\nrows: 177, rows with a failure: 177, failing identities: 253 $ isoperim exceptions --regenerate 300 | tail -1\\nregenerated 14 records; all match the loaded table (n ≤ 300) Every command accepts --exceptions-file PATH (or ISOPERIM_EXCEPTIONS\\nin the environment; the flag wins) to substitute a table, which goes\\nthrough the full loader validation described in the exception chapter.","breadcrumbs":"The command line » exceptions","id":"28","title":"exceptions"},"29":{"body":"bounds runs the inequality catalog over a range or at a point: $ isoperim bounds --at 10000000000\\nbounds (n ≤ 10000000000): PASS triangle prints the self-similar arrays; rows of p-minus-f read\\nright-to-left replay Q, which you can see against q-minus-f-minus-1: $ isoperim triangle --rows 7 --series p-minus-f\\n0\\n0\\n0 0\\n1 2 0\\n2 3 2 0\\n3 3 4 2 0\\n4 5 3 4 2 0 plotdata emits figure-ready CSV of a function and its drift against the √(2n) staircase: $ isoperim plotdata --fn Q --max 6\\nn,value,drift\\n0,0,-1\\n1,2,0\\n2,4,1\\n3,3,0\\n4,6,2\\n5,5,1\\n6,4,0 phi shows the fast engine’s recursion orbit — why queries at a trillion\\ncost two steps: $ isoperim phi 1000000000000\\norbit: 1000000000000 -> 1326005 -> 1\\nphi(1000000000000) = 2","breadcrumbs":"The command line » bounds, triangle, plotdata, phi","id":"29","title":"bounds, triangle, plotdata, phi"},"3":{"body":"The complement A^c = {0, 1, …} \\\\ A is infinite, but its boundary is\\nfinite — past max(A) + 1 every integer has both neighbors in A^c. So per(A^c) is well-defined and computable in the window {0, …, max(A) + 1}; the implementation never materializes an infinite\\nset. #![allow(unused)] fn main() {\\nuse isoperim::set_model::IntSet; let a = IntSet::new(vec![0, 1, 2]).unwrap();\\n// complement boundary: {3}\\nassert_eq!(a.complement_perimeter(), 3); let b = IntSet::new(vec![1]).unwrap();\\n// complement boundary: {0, 2}\\nassert_eq!(b.complement_perimeter(), 2); // Edge case: the complement of ∅ is everything; its boundary is {0},\\n// which contributes 0.\\nassert_eq!(IntSet::empty().complement_perimeter(), 0); }","breadcrumbs":"Sets, volume, and perimeter » Complement perimeter","id":"3","title":"Complement perimeter"},"4":{"body":"P(n) = min { per(A) : vol(A) = n }\\nQ(n) = min { per(A^c) : vol(A) = n } Both minima exist for every n ≥ 0 (the candidate family is nonempty and\\nperimeters are nonnegative integers), and P(0) = Q(0) = 0 via A = ∅.","breadcrumbs":"Sets, volume, and perimeter » The two minima","id":"4","title":"The two minima"},"5":{"body":"Two lemmas pin the scale of everything that follows. For nonempty A with m = max(A): Lemma 3.1: m ≤ per(A) ≤ vol(A) — the maximum is always boundary,\\nand boundary elements sum to at most the whole volume. Since A ⊆ {0, …, m} also forces vol(A) ≤ T_m = m(m+1)/2, volume- n sets\\nneed m of order √(2n), which is where the √(2n) growth of both\\nfunctions comes from. Complement lemma: m + 1 ≤ per(A^c), with equality exactly when {1, …, m} ⊆ A. #![allow(unused)] fn main() {\\nuse isoperim::set_model::IntSet; let a = IntSet::new(vec![2, 4, 5, 9]).unwrap();\\nlet m = a.max().unwrap();\\nassert!(m <= a.perimeter());\\nassert!(a.perimeter() <= a.volume());\\nassert!(m + 1 <= a.complement_perimeter()); // Equality case of the complement lemma: {1, …, m} ⊆ A.\\nlet solid = IntSet::new(vec![1, 2, 3, 4]).unwrap();\\nassert_eq!(solid.complement_perimeter(), 4 + 1); } These two lemmas are also enforced statistically: the property-test suite\\nchecks them on 10⁵ random sets, and ValueTable construction rejects any\\nengine output that dips below the lower bounds they imply.","breadcrumbs":"Sets, volume, and perimeter » Elementary inequalities","id":"5","title":"Elementary inequalities"},"6":{"body":"Every structural statement about P and Q runs through one piece of\\nnumber theory: each n ≥ 1 sits just below a unique triangular number.\\nWith T_m = 1 + 2 + ⋯ + m = m(m+1)/2, there are unique f = f(n) and g = g(n) with n = T_f − g, 0 ≤ g < f. Equivalently T_{f−1} < n ≤ T_f: f names the “row” of n and g\\nmeasures how far n falls short of the row’s triangular number. The row\\nindex has a closed form, f(n) = [√(2n)] — nearest integer, not floor —\\nand a tie can never happen because 2n is an even integer while (k + ½)² = k² + k + ¼ never is. #![allow(unused)] fn main() {\\nuse isoperim::numeric_core::{decompose, f_of, g_of, triangular}; // 12 = T_5 − 3 = 15 − 3\\nlet d = decompose(12);\\nassert_eq!((d.f, d.g), (5, 3));\\nassert_eq!(triangular(d.f) - d.g, 12); // f is the nearest integer to √(2n): √24 ≈ 4.899 rounds up.\\nassert_eq!(f_of(12), 5);\\n// Triangular numbers are the g = 0 points.\\nassert_eq!(g_of(triangular(1000)), 0); } Why this matters: the minimizers of both P and Q are near-triangular\\nstaircases, and the defect g is exactly the size of the subproblem they\\nleave behind. The central identities (Theorem 6.5) say that away from\\nfinitely many exceptions P(n) = f(n) + Q(g(n))\\nQ(n) = 1 + f(n) + P(g(n)) so computing at n reduces to computing at g(n) — a number smaller than √(2n). The triangle layout in the CLI’s triangle command arranges each\\nseries by rows of constant f, which is what makes the self-similarity\\nvisible: row r read right-to-left replays the beginning of the other\\nseries.","breadcrumbs":"The triangular decomposition » The triangular decomposition","id":"6","title":"The triangular decomposition"},"7":{"body":"Iterating g shrinks n below √(2n) at every step, so orbit lengths are\\ndoubly logarithmic. Proposition 5.4 makes this quantitative: g^l(n) ≤ (2n)^(1/2^l) / 2^(2 − 1/2^(l−1)) + l − 1 for 1 ≤ l ≤ 6, and\\nthe crate checks that bound exhaustively for n ≤ 10⁶ in its structural\\nsuite. The recursion depth φ(n) — the number of g steps until the orbit enters\\nthe exception horizon 149,894 where stored values take over — is the cost\\nof a fast-engine query: #![allow(unused)] fn main() {\\nuse isoperim::fast_engine::EXCEPTION_HORIZON;\\nuse isoperim::numeric_core::{g_iterate_bound_holds, g_orbit}; let orbit = g_orbit(1_000_000_000_000, EXCEPTION_HORIZON);\\nassert_eq!(orbit.iterates[0], 1_000_000_000_000);\\nassert_eq!(orbit.phi, 2); // 10¹² → 1,326,005 → 1 // The Prop 5.4 envelope holds along the way.\\nfor l in 0..=6 { assert!(g_iterate_bound_holds(1_000_000_000_000, l));\\n} } Two g-steps suffice for a trillion — and in fact for every supported n:\\none step lands below √(2 · 4 × 10¹⁷) < 9 × 10⁸, a second lands below √(2 · 9 × 10⁸) < 43,000, already inside the horizon. So φ(n) ≤ 2\\nthroughout the u64 range the crate accepts, and the doubly-logarithmic\\nbound only becomes visible for integers far beyond it.","breadcrumbs":"The triangular decomposition » The g-orbit collapses doubly fast","id":"7","title":"The g-orbit collapses doubly fast"},"8":{"body":"All arithmetic is u64 with u128 intermediates where products appear.\\nThe decomposition itself is safe whenever T_{f(n)} fits, which holds for n ≤ MAX_SUPPORTED_N = 4 × 10¹⁷; the constant is exported and every\\npublic entry point checks it rather than silently wrapping. #![allow(unused)] fn main() {\\nuse isoperim::numeric_core::{decompose, MAX_SUPPORTED_N}; let d = decompose(MAX_SUPPORTED_N);\\nd.validate(); // n = T_f − g, 0 ≤ g < f, with no overflow en route }","breadcrumbs":"The triangular decomposition » The supported range","id":"8","title":"The supported range"},"9":{"body":"One function, three implementations, no shared code paths: the point is\\nthat they can only agree by being right. This chapter walks through each\\nengine in the order you would trust them.","breadcrumbs":"Three engines » Three engines","id":"9","title":"Three engines"}},"length":30,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{",":{"0":{",":{"0":{",":{"0":{",":{"1":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},".":{".":{"=":{"6":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"9":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":16,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"16":{"tf":2.0},"2":{"tf":2.8284271247461903},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"29":{"tf":2.8284271247461903},"3":{"tf":2.449489742783178},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.0}}},"1":{")":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"₂":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"₂":{"(":{"df":0,"docs":{},"n":{"/":{"2":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"+":{"2":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},",":{"2":{",":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"2":{"6":{",":{"0":{"0":{"5":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"2":{"^":{"(":{"df":0,"docs":{},"l":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"df":3,"docs":{"25":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":1,"docs":{"29":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"27":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":8,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":2.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":2.23606797749979},"8":{"tf":1.0}}},"2":{"df":2,"docs":{"21":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"3":{"2":{"6":{"0":{"0":{"5":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"4":{"2":{"8":{"8":{"1":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{",":{"8":{"9":{"4":{"df":3,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"9":{"4":{"df":2,"docs":{"16":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"8":{"9":{"4":{"df":1,"docs":{"15":{"tf":1.0}}},"5":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0}}},"5":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"6":{"tf":1.0}}},"7":{"7":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"28":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"8":{"0":{"5":{"8":{"1":{"1":{"3":{"0":{"1":{"df":1,"docs":{"20":{"tf":1.0}}},"2":{"]":{"df":0,"docs":{},"·":{"2":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"5":{"3":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"1":{"5":{"_":{"8":{"4":{"4":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}},"5":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":19,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"29":{"tf":2.0},"3":{"tf":2.0},"5":{"tf":2.23606797749979},"6":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772}}},"2":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},",":{"2":{",":{"4":{",":{"1":{",":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{",":{"1":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"0":{"0":{",":{"0":{"0":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"0":{"0":{"df":5,"docs":{"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{",":{"5":{"9":{"8":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"6":{"tf":1.0}}},"5":{",":{"0":{"0":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"df":2,"docs":{"15":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}},"9":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.4142135623730951}}},"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"^":{"(":{"2":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":15,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.7320508075688772},"29":{"tf":2.449489742783178},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":2.0}},"n":{")":{"^":{"(":{"1":{"/":{"2":{"^":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"19":{"tf":2.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":2.0},"7":{"tf":1.0}}},"p":{"+":{"1":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"q":{"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"s":{")":{"+":{"c":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"3":{",":{"3":{",":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"1":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":2,"docs":{"16":{"tf":1.0},"28":{"tf":1.4142135623730951}}},"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"df":11,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":2.0},"21":{"tf":2.0},"26":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":2.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.7320508075688772}}},"4":{",":{"4":{",":{"6":{",":{"1":{",":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{",":{"2":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"8":{"9":{"9":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":1,"docs":{"16":{"tf":1.0}}},"3":{",":{"0":{"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"0":{"tf":1.0},"13":{"tf":1.7320508075688772},"16":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}},"5":{")":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"\\"":{"df":0,"docs":{},"σ":{"(":{"5":{";":{"5":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},",":{"5":{",":{"1":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"4":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"6":{"df":2,"docs":{"20":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"0":{"0":{"0":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"2":{"df":1,"docs":{"28":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"9":{"6":{"df":2,"docs":{"16":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":5,"docs":{"21":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"6":{",":{"4":{",":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"1":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"df":1,"docs":{"11":{"tf":1.0}}},"5":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0}}},"7":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":2,"docs":{"13":{"tf":1.0},"27":{"tf":1.0}}},"df":4,"docs":{"11":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"7":{"tf":1.0}}},"7":{",":{"6":{",":{"7":{",":{"1":{",":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.0}}},"6":{"df":1,"docs":{"15":{"tf":1.0}}},"df":4,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"29":{"tf":1.0}}},"8":{"df":1,"docs":{"10":{"tf":1.4142135623730951}},"n":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}},"9":{"2":{"df":1,"docs":{"12":{"tf":1.0}}},"8":{"0":{"1":{"df":0,"docs":{},"·":{"2":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"z":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}}},"a":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"1":{"8":{"6":{"0":{"5":{"3":{"df":1,"docs":{"0":{"tf":1.0}},"’":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"^":{"c":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"25":{"tf":1.7320508075688772}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":6,"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"19":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":15,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"27":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"21":{"tf":1.0},"6":{"tf":1.0}}}},"y":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"!":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"p":{"(":{"5":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"a":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"b":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"2":{"0":{"0":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"s":{"_":{"a":{"df":0,"docs":{},"t":{"(":{"1":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"1":{"2":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"&":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"5":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"s":{"(":{"1":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"m":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"16":{"tf":1.0},"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"\\"":{"6":{",":{"3":{",":{"0":{"\\\\":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"\\"":{"df":0,"docs":{},"n":{",":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{",":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"\\\\":{"df":0,"docs":{},"n":{"0":{",":{"0":{",":{"0":{"\\\\":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"(":{"d":{".":{"df":0,"docs":{},"f":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{".":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"(":{")":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"b":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"(":{"1":{"2":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"q":{"(":{"1":{"2":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"(":{"2":{"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"q":{"(":{"2":{"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"f":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"(":{"1":{"2":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"(":{"1":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"9":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"q":{"(":{"1":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"9":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"g":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"(":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"(":{"1":{"0":{"0":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"(":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"[":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"15":{"tf":1.0}},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{".":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"(":{"2":{"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"(":{"5":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"s":{"[":{"3":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"(":{"d":{".":{"df":0,"docs":{},"f":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"p":{"(":{"2":{"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"q":{"(":{"2":{"9":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}}}}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"b":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":4,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"20":{"tf":1.0},"7":{"tf":1.0}}}}},"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":6,"docs":{"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"16":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":3,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":2.0},"5":{"tf":1.4142135623730951}}}}},"df":11,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"q":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":1,"docs":{"25":{"tf":1.0}}}}}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"25":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{"1":{"0":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":2,"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0}}}}}},"c":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"d":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":3,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":4,"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":3,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"2":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"12":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"1":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":12,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}},"’":{"df":1,"docs":{"6":{"tf":1.0}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":4,"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":5,"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"20":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"3":{"tf":2.0},"5":{"tf":1.4142135623730951}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.7320508075688772},"3":{"tf":1.0},"6":{"tf":1.4142135623730951}},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"q":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"11":{"tf":1.0}},"e":{"(":{"3":{"0":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"n":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"r":{"5":{".":{"2":{"_":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"3":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":2,"docs":{"2":{"tf":1.0},"26":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{",":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":4,"docs":{"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"d":{".":{"df":0,"docs":{},"g":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":2,"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{"1":{"2":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"8":{"tf":1.0}}}}}}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":2,"docs":{"11":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"i":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"k":{"df":2,"docs":{"16":{"tf":1.0},"23":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":2,"docs":{"16":{"tf":1.0},"28":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"p":{"df":1,"docs":{"5":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}},"q":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":4,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"24":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":2.449489742783178},"16":{"tf":1.7320508075688772},"28":{"tf":1.0}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"22":{"tf":1.7320508075688772},"29":{"tf":1.0}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":8,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}}}}},"m":{"b":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"v":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":3,"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"15":{"tf":1.0},"18":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"d":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":2.0}}}}}}}},"df":1,"docs":{"8":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":19,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":2.23606797749979},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"20":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"21":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}},"s":{"(":{"3":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"c":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":4,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"17":{"tf":1.0},"28":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"16":{"tf":1.0},"5":{"tf":1.4142135623730951}}},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"24":{"tf":1.4142135623730951}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":4,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"/":{"df":0,"docs":{},"o":{"d":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":1,"docs":{"6":{"tf":1.0}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":6,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":2.0},"21":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":8,"docs":{"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"c":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"2":{"9":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":5,"docs":{"0":{"tf":2.0},"12":{"tf":2.449489742783178},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"e":{"df":1,"docs":{"21":{"tf":1.0}},"p":{"df":0,"docs":{},"t":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.7320508075688772},"14":{"tf":2.23606797749979},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":2.449489742783178},"6":{"tf":1.0},"7":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"d":{"d":{"df":0,"docs":{},"e":{"d":{"(":{")":{")":{")":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0}}}}},"df":0,"docs":{}},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"4":{"tf":1.0}}}},"t":{"df":2,"docs":{"24":{"tf":1.0},"27":{"tf":1.0}}}},"p":{"(":{"c":{"df":0,"docs":{},"√":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"s":{"df":2,"docs":{"11":{"tf":1.0},"2":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":2,"docs":{"16":{"tf":1.0},"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"f":{"(":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"4":{"df":1,"docs":{"21":{"tf":1.0}}},"5":{"df":2,"docs":{"11":{"tf":1.0},"21":{"tf":1.0}}},"6":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":6,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"6":{"tf":2.0}}}},"+":{"1":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":1,"docs":{"6":{"tf":1.0}}}}},"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":7,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"r":{"df":2,"docs":{"6":{"tf":1.0},"7":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{",":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"p":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"q":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"6":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"(":{"1":{"1":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":9,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}}}}},"df":7,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.7320508075688772},"21":{"tf":1.0},"29":{"tf":1.7320508075688772},"6":{"tf":2.23606797749979},"8":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0}}}}},"t":{"df":2,"docs":{"11":{"tf":1.0},"8":{"tf":1.0}}},"x":{"df":2,"docs":{"1":{"tf":1.0},"20":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":6,"docs":{"16":{"tf":2.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"6":{"tf":1.0}}}}}},"n":{"df":18,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"r":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":4,"docs":{"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}},"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.0}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"19":{"tf":1.0},"28":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"(":{"df":0,"docs":{},"n":{"df":3,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"+":{"df":0,"docs":{},"f":{"+":{"1":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"^":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":1,"docs":{"6":{"tf":1.0}}},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"(":{"1":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"_":{"0":{"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":5,"docs":{"1":{"tf":1.0},"21":{"tf":1.4142135623730951},"6":{"tf":2.449489742783178},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.0}}}}}}},"i":{"b":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"16":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":2,"docs":{"11":{"tf":1.0},"24":{"tf":1.0}},"e":{"df":1,"docs":{"28":{"tf":1.0}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"22":{"tf":1.0}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"h":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"r":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"’":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772}}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":4,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"i":{"1":{"2":{"8":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"16":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}}}},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":1,"docs":{"6":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":8,"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"’":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":2,"docs":{"19":{"tf":1.0},"20":{"tf":1.7320508075688772}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}},"1":{"]":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"2":{"tf":1.0},"5":{"tf":1.0}}},"2":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{":":{":":{"a":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{":":{":":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"q":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"{":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"b":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}},"df":0,"docs":{},"t":{"df":3,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}},"{":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951}}},"t":{"df":3,"docs":{"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"{":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":2,"docs":{"6":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"{":{"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"28":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":9,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":2.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}},"q":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"18":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"j":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"o":{"b":{"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}}}}},"k":{"df":2,"docs":{"11":{"tf":2.6457513110645907},"6":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.0}}}},"y":{"df":3,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"15":{"tf":1.0}},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"l":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"20":{"tf":1.0}}}},"w":{"df":1,"docs":{"11":{"tf":1.0}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}}}}}},"df":1,"docs":{"7":{"tf":2.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}},"v":{"df":2,"docs":{"16":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":2,"docs":{"11":{"tf":1.0},"5":{"tf":2.23606797749979}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}}}}}},"h":{"df":1,"docs":{"18":{"tf":1.0}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"1":{"tf":1.0},"24":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"16":{"tf":1.0}},"e":{"df":1,"docs":{"16":{"tf":1.0}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":2,"docs":{"1":{"tf":1.0},"24":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}}},"o":{"a":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":4,"docs":{"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"28":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.4142135623730951},"28":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":2,"docs":{"20":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}}}},"df":1,"docs":{"20":{"tf":1.0}},"i":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}}}},"m":{"(":{"df":0,"docs":{},"m":{"+":{"1":{")":{"/":{"2":{"df":2,"docs":{"5":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":15,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"6":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"26":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"x":{"(":{"a":{"df":2,"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":3,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"29":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"df":3,"docs":{"11":{"tf":1.0},"5":{"tf":2.8284271247461903},"6":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}}}},"i":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"4":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"m":{"a":{"df":2,"docs":{"11":{"tf":1.0},"4":{"tf":1.0}}},"df":1,"docs":{"6":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.7320508075688772}}}}}},"u":{"df":1,"docs":{"29":{"tf":2.0}}}},"s":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":4,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.7320508075688772}}}},"x":{"df":2,"docs":{"15":{"tf":1.0},"20":{"tf":1.0}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}}}},"n":{",":{"df":0,"docs":{},"p":{",":{"df":0,"docs":{},"q":{",":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{",":{"df":0,"docs":{},"q":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{",":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"11":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"19":{"tf":1.0},"6":{"tf":1.0}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":22,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":2.0},"11":{"tf":3.0},"12":{"tf":2.0},"13":{"tf":2.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":2.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"26":{"tf":1.7320508075688772},"27":{"tf":3.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":2.449489742783178},"7":{"tf":2.23606797749979},"8":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":3,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":1.0}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"t":{"df":1,"docs":{"11":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"16":{"tf":1.0}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"4":{"tf":1.0},"5":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}},"h":{"df":2,"docs":{"10":{"tf":1.0},"18":{"tf":1.0}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"w":{"df":2,"docs":{"13":{"tf":1.0},"2":{"tf":1.0}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":2.23606797749979},"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}},"φ":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}}},"n":{"c":{"df":3,"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}}},"df":10,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"20":{"tf":2.0},"24":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"11":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"20":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":5,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"29":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772}},"’":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.4142135623730951}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"5":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"18":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"\\"":{":":{"1":{"4":{"1":{"5":{"8":{"4":{"4":{",":{"\\"":{"df":0,"docs":{},"q":{"\\"":{":":{"1":{"4":{"1":{"5":{"8":{"4":{"5":{",":{"\\"":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"\\"":{":":{"\\"":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"\\"":{",":{"\\"":{"df":0,"docs":{},"n":{"\\"":{":":{"1":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"(":{"0":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"4":{"tf":1.0}}},"3":{"df":1,"docs":{"2":{"tf":1.0}}},"4":{"df":1,"docs":{"21":{"tf":1.0}}},"5":{"df":1,"docs":{"21":{"tf":1.0}}},"6":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}}}},"df":1,"docs":{"19":{"tf":1.0}}},"n":{")":{"/":{"df":0,"docs":{},"√":{"(":{"2":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":9,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},"=":{"1":{"4":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.7320508075688772}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"27":{"tf":3.1622776601683795},"29":{"tf":1.0}}},"t":{"df":2,"docs":{"16":{"tf":1.0},"3":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":5,"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}}}}}}},"y":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":9,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"(":{"a":{"^":{"c":{"df":3,"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":3,"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.7320508075688772},"2":{"tf":1.7320508075688772},"4":{"tf":1.0}}}}}}}},"h":{"df":0,"docs":{},"i":{"(":{"1":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"29":{"tf":1.4142135623730951}}}},"i":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"n":{"df":3,"docs":{"16":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}}},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":2,"docs":{"24":{"tf":1.0},"29":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"22":{"tf":1.0}}}},"u":{"df":1,"docs":{"10":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"28":{"tf":1.0},"29":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"e":{"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"p":{"3":{".":{"2":{"df":1,"docs":{"19":{"tf":1.0}}},"4":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"21":{"tf":1.0},"5":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}}}},"v":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"23":{"tf":1.0}}}}},"−":{"df":0,"docs":{},"f":{"df":1,"docs":{"19":{"tf":1.0}}}}},"q":{"(":{"0":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"4":{"tf":1.0}}},"1":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}}}},"df":1,"docs":{"19":{"tf":1.0}}},"n":{"df":9,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},".":{"3":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"=":{"1":{"5":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":8,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"29":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951}},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}}}}}},"−":{"1":{"df":0,"docs":{},"−":{"df":0,"docs":{},"f":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"18":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"7":{"tf":1.0}}}},"w":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":2,"docs":{"21":{"tf":1.0},"6":{"tf":1.0}},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"df":3,"docs":{"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{".":{"df":0,"docs":{},"q":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":1,"docs":{"15":{"tf":1.0}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.7320508075688772},"26":{"tf":1.0}}}}}},"r":{"d":{"df":4,"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951}}},"s":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"u":{"c":{"df":2,"docs":{"20":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"0":{"tf":1.0}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"s":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"&":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":3,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"28":{"tf":1.7320508075688772}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"a":{"c":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{},"y":{"df":3,"docs":{"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"26":{"tf":1.0}}}}},"h":{"df":1,"docs":{"18":{"tf":1.0}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":4,"docs":{"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"w":{"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":2.449489742783178},"13":{"tf":1.0},"15":{"tf":2.23606797749979},"16":{"tf":3.1622776601683795},"20":{"tf":1.0},"21":{"tf":2.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951},"6":{"tf":2.0}},"’":{"df":2,"docs":{"16":{"tf":1.0},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"s":{"a":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"18":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"16":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}}}},"n":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":1,"docs":{"19":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"d":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}},"df":2,"docs":{"0":{"tf":1.0},"29":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"f":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}}},"n":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"24":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"22":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.4142135623730951}}}},"t":{"df":9,"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.0},"10":{"tf":2.0},"11":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":2,"docs":{"24":{"tf":1.4142135623730951},"26":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"w":{"df":1,"docs":{"29":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"20":{"tf":1.0},"8":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"t":{"df":1,"docs":{"6":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}}},"l":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}},"e":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"c":{"a":{"df":0,"docs":{},"s":{"df":2,"docs":{"29":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"d":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"t":{"df":2,"docs":{"15":{"tf":1.0},"28":{"tf":1.0}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"y":{"df":3,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":2,"docs":{"24":{"tf":1.4142135623730951},"26":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":3,"docs":{"16":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":2.0}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"0":{"tf":1.0},"11":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":7,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"f":{"8":{"(":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":1,"docs":{"16":{"tf":1.0}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"t":{"df":9,"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0}}}},"m":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"5":{"tf":1.0}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"t":{"_":{"5":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"f":{"df":2,"docs":{"6":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"m":{"df":2,"docs":{"5":{"tf":1.0},"6":{"tf":1.0}}},"r":{"df":1,"docs":{"21":{"tf":1.0}}},"{":{"df":0,"docs":{},"f":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{},"−":{"1":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}}}},"a":{"b":{"df":0,"docs":{},"l":{"df":11,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.4142135623730951},"28":{"tf":2.0}},"e":{"1":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"20":{"tf":1.0},"28":{"tf":1.4142135623730951}}}},"k":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"7":{"tf":1.0}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":1,"docs":{"11":{"tf":2.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":8,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"28":{"tf":1.0}},"|":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":0,"docs":{},"|":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"|":{"b":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":6,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}},"g":{"df":1,"docs":{"17":{"tf":1.0}}}},"r":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"m":{"5":{".":{"5":{"_":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"6":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{".":{"4":{"_":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":6,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}}},"i":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"20":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":3,"docs":{"21":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"e":{"(":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"21":{"tf":1.0}},"e":{":":{":":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"(":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"1":{"df":1,"docs":{"21":{"tf":1.0}}},"2":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"6":{"tf":2.23606797749979}}}},"df":0,"docs":{}}}}}},"df":1,"docs":{"21":{"tf":1.0}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"9":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":10,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"u":{"1":{"2":{"8":{"df":2,"docs":{"20":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"4":{"df":3,"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"21":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"10":{"tf":1.0},"18":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}}},"p":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"6":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":2.0}}}}}},"s":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}}},"df":17,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":2.6457513110645907},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":11,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"7":{"tf":1.0}},"e":{"/":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}},"<":{"_":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0}},"i":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951}}}}}}},"i":{"a":{"df":3,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"11":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":4,"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"l":{"(":{"a":{"df":3,"docs":{"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":6,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}}}}},"t":{"df":3,"docs":{"11":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0}}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"9":{"tf":1.0}}}},"y":{"df":3,"docs":{"0":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"8":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"14":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0}}}}},"df":2,"docs":{"17":{"tf":1.0},"28":{"tf":1.0}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"24":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"+":{"1":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":2.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"2":{"tf":1.0}}}}},"−":{"1":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"breadcrumbs":{"root":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}},"b":{"df":1,"docs":{"26":{"tf":1.0}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":1,"docs":{"11":{"tf":1.0}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":5,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"28":{"tf":1.0}}}}}},"df":0,"docs":{}}},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"g":{"df":1,"docs":{"7":{"tf":1.0}}},"h":{"a":{"df":0,"docs":{},"r":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"5":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}}}},"o":{"a":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}},"t":{"df":4,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"26":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"29":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"4":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":4,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"title":{"root":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}},"b":{"df":1,"docs":{"26":{"tf":1.0}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":1,"docs":{"11":{"tf":1.0}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}}}}}},"x":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.0}}}}}},"df":0,"docs":{}}},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"g":{"df":1,"docs":{"7":{"tf":1.0}}},"h":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"5":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}}},"o":{"a":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}}}}}}},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"29":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"4":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"18":{"tf":1.0}},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));