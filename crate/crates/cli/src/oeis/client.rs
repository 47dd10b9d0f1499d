use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use super::{parse_bfile, Cache, OeisError, OeisId, OeisRef, Source};

/// Performs one HTTP GET. `Ok(None)` means the server answered 404.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<Option<String>, String>;
}

pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .user_agent("permstat")
            .build()
            .into();
        HttpTransport { agent }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport::new(Duration::from_secs(30))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Option<String>, String> {
        match self.agent.get(url).call() {
            Ok(mut resp) => resp
                .body_mut()
                .read_to_string()
                .map(Some)
                .map_err(|e| e.to_string()),
            Err(ureq::Error::StatusCode(404)) => Ok(None),
            Err(e) => Err(e.to_string()),
        }
    }
}

pub struct Client {
    cache: Cache,
    transport: Box<dyn Transport>,
    offline: bool,
    max_age: Option<Duration>,
    in_flight: Mutex<HashMap<OeisId, Arc<Mutex<()>>>>,
}

impl Client {
    pub fn new(cache: Cache, transport: Box<dyn Transport>) -> Self {
        Client {
            cache,
            transport,
            offline: false,
            max_age: None,
            in_flight: Mutex::new(HashMap::new()),
        }
    }

    /// Never touch the network; serve only cached sequences.
    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    /// Treat cache entries older than `max_age` as missing.
    pub fn max_age(mut self, max_age: Option<Duration>) -> Self {
        self.max_age = max_age;
        self
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    /// Cached terms when available, otherwise one download of the b-file.
    /// Concurrent calls for the same id wait for a single download.
    pub fn fetch(&self, id: &OeisId) -> Result<OeisRef, OeisError> {
        let gate = {
            let mut map = self.in_flight.lock().expect("lock poisoned");
            map.entry(id.clone()).or_default().clone()
        };
        let _guard = gate.lock().expect("lock poisoned");
        if let Some(hit) = self.cache.read(id, self.max_age)? {
            return Ok(OeisRef {
                id: id.clone(),
                terms: hit.terms,
                fetched_at: hit.modified,
                source: Source::Cache,
            });
        }
        if self.offline {
            return Err(OeisError::Offline(id.clone()));
        }
        let body = self
            .transport
            .get(&id.bfile_url())
            .map_err(|message| OeisError::Network {
                id: id.clone(),
                message,
            })?
            .ok_or_else(|| OeisError::NotFound(id.clone()))?;
        let terms = parse_bfile(&body)?;
        if terms.is_empty() {
            return Err(OeisError::NotFound(id.clone()));
        }
        self.cache.write(id, &terms)?;
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Ok(OeisRef {
            id: id.clone(),
            terms,
            fetched_at: now,
            source: Source::Network,
        })
    }
}
