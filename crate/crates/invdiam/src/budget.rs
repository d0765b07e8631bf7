use std::time::{Duration, Instant};

use invdiam_core::assignment::Interrupt;

/// Wall-clock limit for a search. Polls the clock every 1024 calls.
pub struct Deadline {
    at: Option<Instant>,
    calls: u32,
}

impl Deadline {
    /// `None` or a non-positive limit means no limit.
    pub fn after(seconds: Option<f64>) -> Self {
        let at = seconds
            .filter(|s| s.is_finite() && *s > 0.0)
            .map(|s| Instant::now() + Duration::from_secs_f64(s));
        Deadline { at, calls: 0 }
    }
}

impl Interrupt for Deadline {
    fn should_stop(&mut self) -> bool {
        let Some(at) = self.at else {
            return false;
        };
        self.calls = self.calls.wrapping_add(1);
        self.calls.is_multiple_of(1024) && Instant::now() >= at
    }
}
