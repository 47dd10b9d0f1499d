//! OEIS client behaviour against an in-memory transport.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use permstat::oeis::{
    compare, local_terms, lookup, render_bfile, Cache, Client, OeisError, OeisId, Source, Transport,
};
use permstat_core::distributions::Sequential;

struct Fake {
    body: Option<Result<String, String>>,
    calls: Arc<AtomicUsize>,
}

impl Transport for Fake {
    fn get(&self, url: &str) -> Result<Option<String>, String> {
        assert!(url.starts_with("https://oeis.org/A"), "{url}");
        self.calls.fetch_add(1, Ordering::SeqCst);
        std::thread::sleep(std::time::Duration::from_millis(20));
        match &self.body {
            None => Ok(None),
            Some(r) => r.clone().map(Some),
        }
    }
}

fn client(
    dir: &std::path::Path,
    body: Option<Result<String, String>>,
) -> (Client, Arc<AtomicUsize>) {
    let calls = Arc::new(AtomicUsize::new(0));
    let c = Client::new(
        Cache::new(dir),
        Box::new(Fake {
            body,
            calls: calls.clone(),
        }),
    );
    (c, calls)
}

// Fixture built from this crate's own computation, never from literals.
fn catalan_bfile() -> String {
    let terms = local_terms(lookup("A000108").unwrap(), 9, &Sequential::default()).unwrap();
    format!("# fixture\n\n{}", render_bfile(&terms))
}

fn id(s: &str) -> OeisId {
    s.parse().unwrap()
}

#[test]
fn fetch_caches_and_warm_cache_skips_the_network() {
    let dir = tempfile::tempdir().unwrap();
    let (c, calls) = client(dir.path(), Some(Ok(catalan_bfile())));
    let first = c.fetch(&id("A000108")).unwrap();
    assert_eq!(first.source, Source::Network);
    let shown: Vec<String> = first
        .terms
        .iter()
        .take(5)
        .map(|(_, v)| v.to_string())
        .collect();
    assert_eq!(shown, ["1", "1", "2", "5", "14"]);
    let bytes = std::fs::read(c.cache().path(&id("A000108"))).unwrap();

    let second = c.fetch(&id("A000108")).unwrap();
    assert_eq!(second.source, Source::Cache);
    assert_eq!(second.terms, first.terms);
    assert_eq!(calls.load(Ordering::SeqCst), 1);

    // rewriting parsed cache content reproduces the file byte for byte
    assert_eq!(render_bfile(&second.terms).into_bytes(), bytes);
}

#[test]
fn concurrent_fetches_share_one_download() {
    let dir = tempfile::tempdir().unwrap();
    let (c, calls) = client(dir.path(), Some(Ok(catalan_bfile())));
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| c.fetch(&id("A000108")).unwrap());
        }
    });
    assert_eq!(calls.load(Ordering::SeqCst), 1);
}

#[test]
fn offline_cold_cache_never_fabricates() {
    let dir = tempfile::tempdir().unwrap();
    let (c, calls) = client(dir.path(), Some(Ok(catalan_bfile())));
    let c = c.offline(true);
    assert!(matches!(
        c.fetch(&id("A000108")),
        Err(OeisError::Offline(_))
    ));
    assert_eq!(calls.load(Ordering::SeqCst), 0);
}

#[test]
fn transport_failures() {
    let dir = tempfile::tempdir().unwrap();
    let (c, _) = client(dir.path(), None);
    assert!(matches!(
        c.fetch(&id("A999999")),
        Err(OeisError::NotFound(_))
    ));
    let (c, _) = client(dir.path(), Some(Err("connection refused".into())));
    assert!(matches!(
        c.fetch(&id("A999999")),
        Err(OeisError::Network { .. })
    ));
    let (c, _) = client(dir.path(), Some(Ok("0 1\n1 1\n2 oops\n".into())));
    assert!(matches!(
        c.fetch(&id("A999999")),
        Err(OeisError::Parse { line: 3, .. })
    ));
    assert!(!c.cache().path(&id("A999999")).exists());
}

#[test]
fn stale_cache_entries_are_refetched() {
    let dir = tempfile::tempdir().unwrap();
    let (c, calls) = client(dir.path(), Some(Ok(catalan_bfile())));
    c.fetch(&id("A000108")).unwrap();
    let c = c.max_age(Some(std::time::Duration::ZERO));
    std::thread::sleep(std::time::Duration::from_millis(10));
    assert_eq!(c.fetch(&id("A000108")).unwrap().source, Source::Network);
    assert_eq!(calls.load(Ordering::SeqCst), 2);
}

#[test]
fn registered_offset_matches_and_shifted_offset_fails_at_term_one() {
    let dir = tempfile::tempdir().unwrap();
    let flat = lookup("A091894").unwrap();
    let terms = local_terms(flat, 10, &Sequential::default()).unwrap();
    let (c, _) = client(dir.path(), Some(Ok(render_bfile(&terms))));
    let reference = c.fetch(&id(flat.id)).unwrap();
    let local: Vec<BigInt> = terms.iter().map(|(_, v)| v.clone()).collect();
    let ok = compare(&local, &reference, flat.offset);
    assert!(ok.is_match());
    assert!(ok.matched >= 20);
    let bad = compare(&local, &reference, flat.offset + 1);
    assert_eq!(bad.first_mismatch.unwrap().term, 1);
}
