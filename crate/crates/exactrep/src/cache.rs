//! A small content-addressed result cache for the CLI: request digests
//! map to stored result JSON. A cache hit reproduces the stored bytes
//! verbatim, so cached and fresh outputs are identical.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

/// Content-addressed store in a directory; one file per request digest.
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    /// Open (creating if needed) a cache rooted at `dir`.
    pub fn open(dir: PathBuf) -> std::io::Result<ResultCache> {
        fs::create_dir_all(&dir)?;
        Ok(ResultCache { dir })
    }

    /// Hex SHA-256 digest of a canonical request string.
    pub fn digest(request: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(request.as_bytes());
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Stored result bytes for this digest, if any.
    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path_for(key)).ok()
    }

    /// Store result bytes under this digest (atomic via temp file).
    pub fn put(&self, key: &str, value: &str) -> std::io::Result<()> {
        let tmp = self.dir.join(format!(".{key}.tmp"));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(value.as_bytes())?;
        }
        fs::rename(&tmp, self.path_for(key))
    }
}
