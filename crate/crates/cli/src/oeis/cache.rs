use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;

use super::{parse_bfile, render_bfile, OeisError, OeisId};

/// One b-file per sequence, named `A123456.txt`, in canonical form.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

pub struct CachedTerms {
    pub terms: Vec<(i64, BigInt)>,
    pub modified: u64,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: &OeisId) -> PathBuf {
        self.dir.join(format!("{id}.txt"))
    }

    /// Cached terms, if present and (when `max_age` is set) recent enough.
    pub fn read(
        &self,
        id: &OeisId,
        max_age: Option<Duration>,
    ) -> Result<Option<CachedTerms>, OeisError> {
        let path = self.path(id);
        let meta = match std::fs::metadata(&path) {
            Ok(m) => m,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let modified = meta.modified()?;
        if let Some(max) = max_age {
            let age = SystemTime::now()
                .duration_since(modified)
                .unwrap_or_default();
            if age > max {
                return Ok(None);
            }
        }
        let terms = parse_bfile(&std::fs::read_to_string(&path)?)?;
        if terms.is_empty() {
            return Ok(None);
        }
        let modified = modified
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Ok(Some(CachedTerms { terms, modified }))
    }

    /// Writes atomically: a temporary file is renamed into place.
    pub fn write(&self, id: &OeisId, terms: &[(i64, BigInt)]) -> Result<(), OeisError> {
        std::fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".{id}.tmp"));
        std::fs::write(&tmp, render_bfile(terms))?;
        std::fs::rename(&tmp, self.path(id))?;
        Ok(())
    }
}
