/// Numeric tolerance used by definiteness tests, boundary classification and
/// zero bands throughout the library.
///
/// The value is a relative tolerance; every predicate scales it by a local
/// magnitude before comparing. All analysis entry points take a `Tol` so a
/// run is a pure function of its inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tol(pub f64);

impl Tol {
    pub const DEFAULT: Tol = Tol(1e-9);

    /// Absolute band for a quantity of the given magnitude scale.
    pub fn band(&self, scale: f64) -> f64 {
        self.0 * scale.max(1.0)
    }
}

impl Default for Tol {
    fn default() -> Self {
        Tol::DEFAULT
    }
}
