//! Feature dispatch between the rayon and sequential code paths.

/// Evaluates the first expression when the `parallel` feature is enabled,
/// the second otherwise.
macro_rules! maybe_parallel {
    (par: $par:expr, seq: $seq:expr $(,)?) => {{
        #[cfg(feature = "parallel")]
        {
            $par
        }
        #[cfg(not(feature = "parallel"))]
        {
            $seq
        }
    }};
}

pub(crate) use maybe_parallel;
