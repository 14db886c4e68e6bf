use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // fields
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree {0} outside the supported range 1..=4")]
    DegreeOutOfRange(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,

    // groups
    #[error("generator {0} is not a bijection")]
    NotABijection(String),
    #[error("group closure exceeds the element cap of {cap}")]
    ElementCapExceeded { cap: usize },
    #[error("action is not an automorphism: {0}")]
    ActionNotAutomorphism(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("normal subgroup must be proper and nontrivial")]
    TrivialOrImproperN,
    #[error("element lies inside the normal subgroup")]
    XInsideN,
    #[error("L is not normal in H")]
    LNotNormalInH,
    #[error("L must be a proper subgroup of H and H a proper nontrivial subgroup")]
    LNotProper,
    #[error("normal subgroup is not nilpotent")]
    NNotNilpotent,
    #[error("prime {0} does not divide |N|")]
    PDoesNotDivide(u64),
    #[error("module is not an elementary abelian p-group")]
    VNotElementaryAbelian,
    #[error("group is not a p-group")]
    NotAPGroup,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("element does not belong to the group: {0}")]
    NotAnElement(String),

    // constructions
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("group is not a Frobenius group with the given kernel")]
    NotFrobenius,
    #[error("inner pair (H, M) is not an equal order pair")]
    InnerPairNotEqualOrder,
    #[error("automorphism is not fixed-point free")]
    NotFixedPointFree,
    #[error("automorphism order {0} is not prime")]
    OrderNotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    // harness
    #[error("unknown theorem id {id:?}; valid ids: {valid}")]
    UnknownTheorem { id: String, valid: String },
}
