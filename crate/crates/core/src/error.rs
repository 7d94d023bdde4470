use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("modulus must be monic, got {0}")]
    NonMonicModulus(String),
    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolynomialParse { input: String, reason: String },
    #[error("gcd({a}, {n}) = {gcd}, expected coprime arguments")]
    NotCoprime { a: u64, n: u64, gcd: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is out of range: {1}")]
    OutOfRange(&'static str, String),
    #[error("invalid permutation {0:?}: images must be a bijection on 1..=n")]
    InvalidPermutation(Vec<u32>),
    #[error("{0} is not a full cycle")]
    NotAFullCycle(String),
    #[error("orbit of {rep} (size {size}) left nonzero residue {residue} mod the cyclotomic polynomial")]
    OrbitSumNonzero {
        rep: String,
        size: usize,
        residue: String,
    },
    #[error("invalid q-Lucas instance: {0}")]
    InvalidLucasInstance(String),
    #[error("cache entry {path} failed its integrity check: {reason}")]
    CacheIntegrity { path: String, reason: String },
    #[error("cache I/O error at {path}: {source}")]
    CacheIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed cache document {path}: {source}")]
    CacheFormat {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}
