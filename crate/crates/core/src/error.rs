use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has more than 255 symbols")]
    AlphabetTooLarge,
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("letter {letter:?} is not in the alphabet \"{alphabet}\"")]
    ForeignLetter { letter: char, alphabet: String },
    #[error("{0} is undefined for the empty word")]
    EmptyWord(&'static str),
    #[error("{0} is not primitive")]
    NotPrimitive(String),
    #[error("{0} must use exactly the three letters of a ternary alphabet")]
    NotTernary(String),
    #[error("the alphabet \"{0}\" is not ternary")]
    NotTernaryAlphabet(String),
    #[error("{0} uses more than two letters")]
    NotBinary(String),
    #[error("{0} is not a palindrome")]
    NotPalindrome(String),
    #[error("{0} admits more than one palindromic special factorization")]
    NonUniqueFactorization(String),
    #[error("{0} satisfies one perfectly clustering Lyndon classifier but not the other")]
    CharacterizationMismatch(String),
    #[error("directive {word} is outside the language {language}")]
    OutsideLanguage { word: String, language: &'static str },
    #[error("image {0} is not a positive word")]
    NegativeImage(String),
    #[error("{0} is not perfectly clustering")]
    NotPerfectlyClustering(String),
    #[error("{word} is shorter than {min} letters")]
    TooShort { word: String, min: usize },
    #[error("bound must be at least {min}, got {got}")]
    BoundTooSmall { min: usize, got: usize },
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("unknown directive language {0:?}")]
    UnknownLanguage(String),
    #[error("unknown automorphism {0:?}")]
    UnknownAutomorphism(String),
    #[error("unknown side {0:?} (expected p1 or p2)")]
    UnknownSide(String),
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
}
