//! Worked examples bundled with the binary, each with golden text and JSON output.

pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    pub script: &'static str,
    pub golden_text: &'static str,
    pub golden_json: &'static str,
    /// Exit code the script is expected to end with.
    pub exit_code: i32,
}

macro_rules! entry {
    ($name:literal, $code:literal, $desc:literal) => {
        Entry {
            name: $name,
            description: $desc,
            script: include_str!(concat!("../examples/", $name, ".am")),
            golden_text: include_str!(concat!("../examples/", $name, ".txt")),
            golden_json: include_str!(concat!("../examples/", $name, ".json")),
            exit_code: $code,
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!(
        "danielewski",
        0,
        "xz = y^2 - y from the plane, with its translation derivation"
    ),
    entry!("square-center", 0, "xz = y^2 from the plane along (x, y^2)"),
    entry!("line-blowup", 0, "3-space along the z-axis: y = xu"),
    entry!(
        "cylinder",
        3,
        "cone xy = zt along (x^2, xy, y^2, z): not semi-basic"
    ),
    entry!(
        "nonnormal",
        3,
        "x^2 z = y^2: dependent gradients, not basic"
    ),
    entry!(
        "tower",
        0,
        "two basic steps over 3-space and a two-root fiber product"
    ),
    entry!("graded-system", 0, "weight grading of the threefold family"),
    entry!(
        "jacobian-cases",
        0,
        "Jacobian derivations for candidate pairs"
    ),
    entry!(
        "family-3-2",
        0,
        "nontriviality certificate for k=3, l=2, n=[2]"
    ),
    entry!(
        "modulus-outside",
        3,
        "modulus outside the locus ideal is rejected"
    ),
];

pub fn find(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Entries whose name contains `filter`.
pub fn select(filter: Option<&str>) -> Vec<&'static Entry> {
    ENTRIES
        .iter()
        .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
        .collect()
}
