//! End-to-end runs of the `permstat` binary.

use std::collections::BTreeMap;
use std::process::{Command, Output};

fn permstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permstat"))
        .args(args)
        .env_remove("PERMSTAT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

// Brute-force reference, independent of the library.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn contains(p: &[usize], pat: &[usize]) -> bool {
    let k = pat.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > p.len() {
        return false;
    }
    loop {
        let vals: Vec<usize> = idx.iter().map(|&i| p[i]).collect();
        if (0..k).all(|a| (0..k).all(|b| (vals[a] < vals[b]) == (pat[a] < pat[b]))) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < p.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn peaks(p: &[usize]) -> usize {
    p.windows(3).filter(|w| w[0] < w[1] && w[1] > w[2]).count()
}

fn avoiders(n: usize, pats: &[&[usize]]) -> Vec<Vec<usize>> {
    all_perms(n)
        .into_iter()
        .filter(|p| pats.iter().all(|q| !contains(p, q)))
        .collect()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn dist_pk_321_json_matches_brute_force() {
    let mut expected: BTreeMap<usize, u64> = BTreeMap::new();
    for p in avoiders(4, &[&[3, 2, 1]]) {
        *expected.entry(peaks(&p)).or_default() += 1;
    }
    let counts: Vec<String> = expected
        .iter()
        .map(|(k, c)| format!("\"{k}\":{c}"))
        .collect();
    let o = permstat(&[
        "dist", "--stat", "pk", "--avoid", "321", "--n", "4", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        format!("{{\"basis\":[\"321\"],\"stat\":\"pk\",\"n\":4,\"counts\":{{{}}},\"method\":\"oracle\"}}\n", counts.join(","))
    );
}

#[test]
fn dist_asc_213_312_is_a_pascal_row() {
    let o = permstat(&[
        "dist", "--stat", "asc", "--avoid", "213,312", "--n", "6", "--format", "csv",
    ]);
    assert_eq!(code(&o), 0);
    let mut expected = String::from("n,k,count\n");
    for k in 0..=5 {
        expected.push_str(&format!("6,{k},{}\n", binom(5, k)));
    }
    assert_eq!(stdout(&o), expected);
}

#[test]
fn dist_vl_123_132_markdown() {
    let o = permstat(&[
        "dist", "--stat", "vl", "--avoid", "123,132", "--n", "5", "--format", "markdown",
    ]);
    assert_eq!(code(&o), 0);
    let row: Vec<String> = (0..3).map(|k| (2 * binom(4, 2 * k)).to_string()).collect();
    assert!(
        stdout(&o).contains(&format!("| 5 | {} |", row.join(" | "))),
        "{}",
        stdout(&o)
    );
}

#[test]
fn dist_json_round_trips_through_the_table_schema() {
    let o = permstat(&["dist", "--stat", "des", "--avoid", "132,321", "--n", "2..6"]);
    assert_eq!(code(&o), 0);
    let table = permstat::render::parse_dist_json(&stdout(&o)).unwrap();
    assert_eq!(table.rows.len(), 5);
    assert_eq!(permstat::render::dist_json(&table), stdout(&o));
}

#[test]
fn dist_usage_errors() {
    assert_eq!(
        code(&permstat(&[
            "dist", "--stat", "pk", "--avoid", "3x1", "--n", "4"
        ])),
        2
    );
    assert_eq!(
        code(&permstat(&[
            "dist", "--stat", "pk", "--avoid", "321", "--n", "4", "--method", "magic"
        ])),
        2
    );
    // no series for asc over 132
    assert_eq!(
        code(&permstat(&[
            "dist", "--stat", "asc", "--avoid", "132", "--n", "4", "--method", "series"
        ])),
        2
    );
    assert_eq!(
        code(&permstat(&[
            "dist", "--stat", "pk", "--avoid", "321", "--n", "11"
        ])),
        2
    );
}

#[test]
fn map_examples() {
    let o = permstat(&["map", "--bijection", "psi", "--input", "617238459"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("UDUUDUDUUDUDUUDDDD"));

    let o = permstat(&["map", "--bijection", "enc123132", "--input", "653241"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("11001"));

    let o = permstat(&["map", "--bijection", "psi", "--input", "321"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("321"));
}

#[test]
fn map_inverses() {
    let o = permstat(&[
        "map",
        "--bijection",
        "psi",
        "--inverse",
        "--input",
        "UDUUDUDUUDUDUUDDDD",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("617238459"));
    let o = permstat(&[
        "map",
        "--bijection",
        "enc123132",
        "--inverse",
        "--input",
        "11001",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("653241"));
    let o = permstat(&[
        "map",
        "--bijection",
        "psi",
        "--input",
        "617238459",
        "--alphabet",
        "binary",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("101101011010110000"));
    let o = permstat(&[
        "map",
        "--bijection",
        "iota",
        "--input",
        "UDUDUDUUDUUUUDUDDDDD",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("UUDUUUUDUUUUDDDDDDDD"));
}

#[test]
fn verify_selected_and_fault_injection() {
    let o = permstat(&["verify", "--only", "PK231", "--max-n", "9"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS PK231"));

    let o = permstat(&[
        "verify",
        "--only",
        "PK231",
        "--max-n",
        "6",
        "--inject-fault",
        "PK231",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("FAIL PK231"));

    assert_eq!(code(&permstat(&["verify", "--only", "NOPE"])), 2);
    assert_eq!(code(&permstat(&["verify"])), 2);
}

#[test]
fn verify_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = permstat(&[
        "verify",
        "--only",
        "NARAYANA,ZETA",
        "--max-n",
        "6",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let doc: permstat::render::VerifyJson =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc.passed);
    assert_eq!(doc.reports.len(), 2);
}

fn series_rows(name: &str, max_n: &str) -> Vec<Vec<i64>> {
    let o = permstat(&[
        "series", "--name", name, "--max-n", max_n, "--format", "csv",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,coeff"));
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); max_n.parse::<usize>().unwrap() + 1];
    for line in lines {
        let f: Vec<i64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let row = &mut rows[f[0] as usize];
        row.resize(row.len().max(f[1] as usize + 1), 0);
        row[f[1] as usize] = f[2];
    }
    rows
}

#[test]
fn series_examples() {
    let sums: Vec<i64> = series_rows("pk321", "6")
        .iter()
        .map(|r| r.iter().sum())
        .collect();
    let catalan: Vec<i64> = (0..=6)
        .map(|n| (binom(2 * n, n) / (n + 1)) as i64)
        .collect();
    assert_eq!(sums, catalan);

    let sums: Vec<i64> = series_rows("ddes132213", "6")
        .iter()
        .map(|r| r.iter().sum())
        .collect();
    for (n, s) in sums.iter().enumerate().skip(1) {
        assert_eq!(*s, avoiders(n, &[&[1, 3, 2], &[2, 1, 3]]).len() as i64);
    }

    let d = series_rows("D", "5");
    let des = series_rows("des321", "5");
    assert!(d[0].is_empty());
    for n in 1..=5 {
        assert_eq!(d[n], des[n - 1], "n={n}");
    }

    assert_eq!(code(&permstat(&["series", "--name", "nope"])), 2);
    assert_eq!(
        code(&permstat(&["series", "--name", "pk321", "--max-n", "99"])),
        2
    );
}

#[test]
fn oeis_bfile_export() {
    let o = permstat(&[
        "oeis",
        "--formula",
        "PK231",
        "--max-n",
        "10",
        "--format",
        "bfile",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[..2], ["1 1", "2 2"]);
    // rows n = 1..=10 of the triangle, k = 0..=(n-1)/2
    let expected: Vec<u64> = (1..=10u64)
        .flat_map(|n| {
            (0..=(n - 1) / 2).map(move |k| {
                (1u64 << (n - 2 * k - 1)) * binom(n - 1, 2 * k) * binom(2 * k, k) / (k + 1)
            })
        })
        .collect();
    let got: Vec<u64> = lines
        .iter()
        .map(|l| l.split(' ').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(got, expected);

    assert_eq!(code(&permstat(&["oeis", "--formula", "UNKNOWN"])), 2);
    assert_eq!(code(&permstat(&["oeis", "--sequence", "X123"])), 2);
}

#[test]
fn oeis_offline_cold_cache_is_an_environment_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = permstat(&[
        "oeis",
        "--formula",
        "PK231",
        "--check",
        "--offline",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn oeis_check_against_warm_cache() {
    let dir = tempfile::tempdir().unwrap();
    let local = stdout(&permstat(&[
        "oeis",
        "--sequence",
        "A000108",
        "--max-n",
        "9",
    ]));
    std::fs::write(dir.path().join("A000108.txt"), &local).unwrap();
    let cache = dir.path().to_str().unwrap();
    let o = permstat(&[
        "oeis",
        "--sequence",
        "A000108",
        "--max-n",
        "9",
        "--check",
        "--offline",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("# MATCH"));

    // values moved one index down; only a(0) = a(1) survives the shift
    let values: Vec<&str> = local
        .lines()
        .map(|l| l.split_once(' ').unwrap().1)
        .collect();
    let shifted: String = values[1..]
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{i} {v}\n"))
        .collect();
    std::fs::write(dir.path().join("A000108.txt"), shifted).unwrap();
    let o = permstat(&[
        "oeis",
        "--sequence",
        "A000108",
        "--max-n",
        "9",
        "--check",
        "--offline",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("MISMATCH at term 2"), "{}", stdout(&o));
}

#[test]
fn config_file_caps_apply() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("permstat.conf");
    std::fs::write(&cfg, "# small caps\nperm_cap = 5\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(
        code(&permstat(&[
            "--config", cfg, "dist", "--stat", "pk", "--avoid", "321", "--n", "5"
        ])),
        0
    );
    assert_eq!(
        code(&permstat(&[
            "--config", cfg, "dist", "--stat", "pk", "--avoid", "321", "--n", "6"
        ])),
        2
    );
    std::fs::write(dir.path().join("bad.conf"), "perm_cap\n").unwrap();
    let bad = dir.path().join("bad.conf");
    assert_eq!(
        code(&permstat(&[
            "--config",
            bad.to_str().unwrap(),
            "series",
            "--name",
            "B"
        ])),
        2
    );
}
