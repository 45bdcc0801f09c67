use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative wall-clock budget for long-running kernels.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub(crate) fn none() -> Self {
        Self { at: None }
    }

    pub(crate) fn after(budget: Duration) -> Self {
        Self {
            at: Instant::now().checked_add(budget),
        }
    }

    #[inline]
    pub(crate) fn check(&self) -> Result<()> {
        match self.at {
            Some(at) if Instant::now() >= at => Err(Error::TimedOut),
            _ => Ok(()),
        }
    }
}
