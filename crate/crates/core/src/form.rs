//! Schubert forms `(p/n,q/m,s/l)` and the 3-butterfly conditions.
//!
//! `p/n` is notation for a pair of integers, never a fraction: `(6/2,6/2,6/2)`
//! and `(3/1,3/1,3/1)` are different forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Six positive integers `(p, n, q, m, s, l)`.
///
/// `p`, `q`, `s` are half the vertex counts of the butterflies around bridges
/// `a`, `b`, `c`; `n`, `m`, `l` locate the start of each bridge. Only positivity
/// is enforced here; [`SchubertForm::strict`] additionally checks the range
/// conditions, and [`validate_butterfly`] reports every condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertForm {
    p: u32,
    n: u32,
    q: u32,
    m: u32,
    s: u32,
    l: u32,
}

impl SchubertForm {
    /// Raw constructor: any six positive integers, not necessarily ordered.
    pub fn new(p: u32, n: u32, q: u32, m: u32, s: u32, l: u32) -> Result<Self> {
        if [p, n, q, m, s, l].contains(&0) {
            return Err(Error::Parse {
                input: format!("({p}/{n},{q}/{m},{s}/{l})"),
                reason: "all six integers must be positive".into(),
            });
        }
        Ok(SchubertForm { p, n, q, m, s, l })
    }

    /// Constructor enforcing `p ≥ q ≥ s ≥ 2`, the ranges of `n, m, l` and
    /// `p + 1 ≤ s + q`.
    pub fn strict(p: u32, n: u32, q: u32, m: u32, s: u32, l: u32) -> Result<Self> {
        let form = Self::new(p, n, q, m, s, l)?;
        let report = validate_butterfly(&form);
        if let Some(clause) = report.violations.iter().find(|c| c.is_range()) {
            return Err(Error::InvalidForm {
                form,
                reason: format!("violates {}", clause.name()),
            });
        }
        Ok(form)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32, u32, u32) {
        (self.p, self.n, self.q, self.m, self.s, self.l)
    }

    /// Number of arcs between bridges `a` and `b`: `p + q − s`.
    pub fn t(&self) -> i64 {
        self.p as i64 + self.q as i64 - self.s as i64
    }

    /// Number of arcs between bridges `b` and `c`: `q + s − p`.
    pub fn v(&self) -> i64 {
        self.q as i64 + self.s as i64 - self.p as i64
    }

    /// Number of arcs between bridges `c` and `a`: `p + s − q`.
    pub fn w(&self) -> i64 {
        self.p as i64 + self.s as i64 - self.q as i64
    }

    /// `p ≥ q ≥ s ≥ 2`.
    pub fn is_canonical_order(&self) -> bool {
        self.p >= self.q && self.q >= self.s && self.s >= 2
    }

    /// The symmetric family `(p/n,p/n,p/n)`.
    pub fn is_symmetric_family(&self) -> bool {
        self.p == self.q && self.q == self.s && self.n == self.m && self.m == self.l
    }

    /// Number of crossings of the canonical diagram of a reduced form.
    pub fn crossing_count(&self) -> usize {
        (self.p + self.q + self.s - 3) as usize
    }
}

impl fmt::Display for SchubertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}/{},{}/{},{}/{})",
            self.p, self.n, self.q, self.m, self.s, self.l
        )
    }
}

impl FromStr for SchubertForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_schubert_form(s)
    }
}

impl Serialize for SchubertForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SchubertForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_schubert_form(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses `"(p/n,q/m,s/l)"`, `"p/n q/m s/l"` or six bare integers.
///
/// The integers are returned exactly as written; `4/2` is not reduced to `2/1`.
pub fn parse_schubert_form(text: &str) -> Result<SchubertForm> {
    let err = |reason: &str| Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(err("unbalanced parentheses")),
    };

    let tokens: Vec<&str> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();

    let fields: Vec<&str> = if tokens.len() == 3 && tokens.iter().all(|t| t.contains('/')) {
        let mut fields = Vec::with_capacity(6);
        for token in &tokens {
            let mut parts = token.split('/');
            match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => {
                    fields.push(a);
                    fields.push(b);
                }
                _ => return Err(err("expected three entries of the form p/n")),
            }
        }
        fields
    } else if tokens.len() == 6 && tokens.iter().all(|t| !t.contains('/')) {
        tokens
    } else {
        return Err(err("expected (p/n,q/m,s/l) or six integers"));
    };

    let mut values = [0u32; 6];
    for (slot, field) in values.iter_mut().zip(&fields) {
        if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(&format!("{field:?} is not a positive decimal integer")));
        }
        *slot = field
            .parse()
            .map_err(|_| err(&format!("{field:?} is out of range")))?;
        if *slot == 0 {
            return Err(err("all six integers must be positive"));
        }
    }
    let [p, n, q, m, s, l] = values;
    SchubertForm::new(p, n, q, m, s, l)
}

/// One condition of the 3-butterfly classification, in the published order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    Order,
    NRange,
    MRange,
    LRange,
    Bound,
    NmNotQ1,
    NlNotP1,
    NmNot2q1,
    NmNot2qp1,
    NlNotPs1,
    MlNotS1,
}

impl Clause {
    pub const ALL: [Clause; 11] = [
        Clause::Order,
        Clause::NRange,
        Clause::MRange,
        Clause::LRange,
        Clause::Bound,
        Clause::NmNotQ1,
        Clause::NlNotP1,
        Clause::NmNot2q1,
        Clause::NmNot2qp1,
        Clause::NlNotPs1,
        Clause::MlNotS1,
    ];

    /// Stable ASCII name used in reports and JSON.
    pub fn name(&self) -> &'static str {
        match self {
            Clause::Order => "p>=q>=s>=2",
            Clause::NRange => "1<=n<=p",
            Clause::MRange => "1<=m<=q",
            Clause::LRange => "1<=l<=s",
            Clause::Bound => "p+1<=s+q",
            Clause::NmNotQ1 => "n+m!=q+1",
            Clause::NlNotP1 => "n+l!=p+1",
            Clause::NmNot2q1 => "m>q+s-p => n+m!=2q+1",
            Clause::NmNot2qp1 => "m>q+s-p => n+m!=2q-p+1",
            Clause::NlNotPs1 => "l<=p-q => n+l!=p-s+1",
            Clause::MlNotS1 => "m<=q+s-p => m+l!=s+1",
        }
    }

    /// Range conditions, as opposed to the conditions excluding degenerate
    /// bridge positions.
    pub fn is_range(&self) -> bool {
        matches!(
            self,
            Clause::Order | Clause::NRange | Clause::MRange | Clause::LRange | Clause::Bound
        )
    }

    fn holds(&self, f: &SchubertForm, rules: Rules) -> bool {
        let (p, n, q, m, s, l) = {
            let (p, n, q, m, s, l) = f.as_tuple();
            (p as i64, n as i64, q as i64, m as i64, s as i64, l as i64)
        };
        let v = q + s - p;
        match self {
            Clause::Order => p >= q && q >= s && s >= 2,
            Clause::NRange => 1 <= n && n <= p,
            Clause::MRange => 1 <= m && m <= q,
            Clause::LRange => 1 <= l && l <= s,
            Clause::Bound => p < s + q,
            Clause::NmNotQ1 => n + m != q + 1,
            Clause::NlNotP1 => n + l != p + 1,
            Clause::NmNot2q1 => !(m > v && n + m == 2 * q + 1),
            Clause::NmNot2qp1 => !(m > v && n + m == 2 * q - p + 1),
            Clause::NlNotPs1 => {
                let guard = match rules {
                    Rules::Corrected => l <= p - q,
                    Rules::AsPublished => l < p - s,
                };
                !(guard && n + l == p - s + 1)
            }
            Clause::MlNotS1 => !(m <= v && m + l == s + 1),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Which guard to use for the `n+l ≠ p−s+1` condition.
///
/// The published statement guards it with `l < p−s`. Working through which
/// arcs join two bridge endpoints shows that the pair `(a_p, c_s)` occurs
/// exactly when `n + l = p − s + 1` and `l ≤ p − q`, so [`Rules::Corrected`]
/// uses that guard. It is the default and agrees with
/// [`crate::butterfly::forbidden_bicycle_check`] on every in-range tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rules {
    #[default]
    Corrected,
    AsPublished,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub form: SchubertForm,
    pub ok: bool,
    pub violations: Vec<Clause>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.ok
    }

    /// True when only the non-range conditions fail.
    pub fn in_range(&self) -> bool {
        self.violations.iter().all(|c| !c.is_range())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            write!(f, "{}: ok", self.form)
        } else {
            write!(f, "{}: violates", self.form)?;
            for (i, clause) in self.violations.iter().enumerate() {
                let sep = if i == 0 { " " } else { ", " };
                write!(f, "{sep}{clause}")?;
            }
            Ok(())
        }
    }
}

/// Checks every 3-butterfly condition and names each one that fails.
pub fn validate_butterfly(form: &SchubertForm) -> ValidationReport {
    validate_with(form, Rules::Corrected)
}

pub fn validate_with(form: &SchubertForm, rules: Rules) -> ValidationReport {
    let violations: Vec<Clause> = Clause::ALL
        .iter()
        .copied()
        .filter(|c| !c.holds(form, rules))
        .collect();
    ValidationReport {
        form: *form,
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(p: u32, n: u32, q: u32, m: u32, s: u32, l: u32) -> SchubertForm {
        SchubertForm::new(p, n, q, m, s, l).unwrap()
    }

    #[test]
    fn parses_paper_notation() {
        assert_eq!(parse_schubert_form("(5/2,5/2,5/2)").unwrap(), form(5, 2, 5, 2, 5, 2));
        assert_eq!(parse_schubert_form("(4/2,4/1,3/1)").unwrap(), form(4, 2, 4, 1, 3, 1));
        assert_eq!(parse_schubert_form("6/2 6/2 6/2").unwrap(), form(6, 2, 6, 2, 6, 2));
        assert_eq!(parse_schubert_form(" ( 4/1, 4/2 ,3/1 ) ").unwrap(), form(4, 1, 4, 2, 3, 1));
        assert_eq!(parse_schubert_form("4 1 4 1 4 1").unwrap(), form(4, 1, 4, 1, 4, 1));
    }

    #[test]
    fn fractions_are_not_reduced() {
        let f = parse_schubert_form("(6/2,6/2,6/2)").unwrap();
        assert_eq!(f.as_tuple(), (6, 2, 6, 2, 6, 2));
        assert_eq!(f.to_string(), "(6/2,6/2,6/2)");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "(5/2,5/2)",
            "(5/2,5/2,5/2",
            "(5/2,5/x,5/2)",
            "(5/0,5/2,5/2)",
            "(-5/2,5/2,5/2)",
            "5/2/1 5/2 5/2",
            "1 2 3 4 5",
            "(5/2,5/2,5/2,1/1)",
        ] {
            assert!(
                matches!(parse_schubert_form(bad), Err(Error::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn borromean_form_is_valid() {
        assert!(validate_butterfly(&form(5, 2, 5, 2, 5, 2)).is_ok());
    }

    #[test]
    fn four_two_family_member_is_valid() {
        // m = 2 ≤ q+s−p = 4 and m+l = 4 ≠ s+1 = 5: no clause fires.
        let report = validate_butterfly(&form(4, 2, 4, 2, 4, 2));
        assert!(report.is_ok(), "{report}");
    }

    #[test]
    fn single_clause_violations() {
        // Found by searching p ≤ 5 for tuples failing exactly one clause.
        let cases = [
            (form(3, 1, 2, 2, 2, 2), Clause::NmNotQ1),
            (form(3, 2, 2, 2, 2, 2), Clause::NlNotP1),
            (form(3, 3, 2, 2, 2, 2), Clause::NmNot2q1),
            (form(4, 1, 3, 2, 2, 1), Clause::NmNot2qp1),
            (form(3, 1, 2, 1, 2, 1), Clause::NlNotPs1),
            (form(3, 1, 2, 1, 2, 2), Clause::MlNotS1),
        ];
        for (f, clause) in cases {
            let report = validate_butterfly(&f);
            assert_eq!(report.violations, vec![clause], "{report}");
        }
    }

    #[test]
    fn published_guard_differs_on_small_cases() {
        let f = form(3, 1, 2, 1, 2, 1);
        assert!(validate_with(&f, Rules::AsPublished).is_ok());
        assert!(!validate_with(&f, Rules::Corrected).is_ok());
        let g = form(4, 2, 4, 1, 2, 1);
        assert!(!validate_with(&g, Rules::AsPublished).is_ok());
        assert!(validate_with(&g, Rules::Corrected).is_ok());
    }

    #[test]
    fn range_violations_are_reported_by_name() {
        let report = validate_butterfly(&form(3, 4, 4, 1, 1, 2));
        let names: Vec<_> = report.violations.iter().map(|c| c.name()).collect();
        assert!(names.contains(&"p>=q>=s>=2"));
        assert!(names.contains(&"1<=n<=p"));
        assert!(names.contains(&"1<=l<=s"));
        assert!(!report.in_range());
    }

    #[test]
    fn strict_rejects_unordered() {
        assert!(SchubertForm::strict(3, 1, 4, 1, 3, 1).is_err());
        assert!(SchubertForm::strict(4, 1, 4, 1, 4, 1).is_ok());
    }

    #[test]
    fn internum_identities() {
        let f = form(7, 3, 5, 2, 4, 1);
        assert_eq!(f.t() + f.w(), 2 * 7);
        assert_eq!(f.t() + f.v(), 2 * 5);
        assert_eq!(f.v() + f.w(), 2 * 4);
    }

    #[test]
    fn report_json_uses_clause_names() {
        let json = serde_json::to_string(&validate_butterfly(&form(3, 1, 2, 2, 2, 2))).unwrap();
        assert_eq!(
            json,
            r#"{"form":"(3/1,2/2,2/2)","ok":false,"violations":["n+m!=q+1"]}"#
        );
    }
}
