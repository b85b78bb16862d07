//! Symbolic group constructors and the small spec language naming them.
//!
//! Grammar (whitespace ignored):
//!   expr   := atom ('x' atom)*                 direct product
//!   atom   := 'C' m                            cyclic of order m
//!           | 'D' m                            dihedral of order 2m
//!           | 'Q' n                            generalized quaternion, n = 2^(k+1) ≥ 8
//!           | 'C' m ':' 'C' q '@r' r           C_m ⋊ C_q with action x ↦ x^r
//!
//! The semidirect action must satisfy gcd(r, m) = 1 and r^q ≡ 1 (mod m).

use super::arith::{gcd, is_power_of_two, pow_mod};
use super::{FiniteGroup, GroupError, MAX_CONSTRUCTED_ORDER};

/// Parsed constructor expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Semidirect { m: usize, q: usize, r: usize },
    Product(Vec<GroupExpr>),
}

impl GroupExpr {
    pub fn order(&self) -> usize {
        match self {
            GroupExpr::Cyclic(m) => *m,
            GroupExpr::Dihedral(m) => 2 * m,
            GroupExpr::Quaternion(n) => *n,
            GroupExpr::Semidirect { m, q, .. } => m * q,
            GroupExpr::Product(fs) => fs.iter().map(GroupExpr::order).product(),
        }
    }
}

impl std::fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupExpr::Cyclic(m) => write!(f, "C{m}"),
            GroupExpr::Dihedral(m) => write!(f, "D{m}"),
            GroupExpr::Quaternion(n) => write!(f, "Q{n}"),
            GroupExpr::Semidirect { m, q, r } => write!(f, "C{m}:C{q}@r{r}"),
            GroupExpr::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

/// A validated group spec: parseable text plus its expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    expr: GroupExpr,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err(text, "empty spec"));
        }
        let factors: Vec<&str> = compact.split('x').collect();
        let mut parsed = Vec::with_capacity(factors.len());
        for factor in factors {
            parsed.push(parse_atom(text, factor)?);
        }
        let expr = if parsed.len() == 1 {
            parsed.pop().expect("one factor")
        } else {
            GroupExpr::Product(parsed)
        };
        Ok(GroupSpec { expr })
    }

    pub fn expr(&self) -> &GroupExpr {
        &self.expr
    }

    /// Group order, available without building the table.
    pub fn order(&self) -> usize {
        self.expr.order()
    }

    /// Canonical text form (whitespace-free).
    pub fn text(&self) -> String {
        self.expr.to_string()
    }

    /// Construct the Cayley table. Orders above [`MAX_CONSTRUCTED_ORDER`]
    /// are refused before any allocation happens.
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let order = self.order();
        if order > MAX_CONSTRUCTED_ORDER {
            return Err(GroupError::OrderBound {
                order,
                bound: MAX_CONSTRUCTED_ORDER,
            });
        }
        build_expr(&self.expr)
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.expr)
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

/// Parse and build in one step.
pub fn make_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    GroupSpec::parse(spec)?.build()
}

fn err(spec: &str, reason: impl Into<String>) -> GroupError {
    GroupError::SpecParse {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_atom(whole: &str, atom: &str) -> Result<GroupExpr, GroupError> {
    if let Some(rest) = atom.strip_prefix('C') {
        if let Some((m_text, action)) = rest.split_once(':') {
            let m = parse_order(whole, m_text)?;
            let (q_text, r_text) = action
                .strip_prefix('C')
                .and_then(|a| a.split_once("@r"))
                .ok_or_else(|| err(whole, format!("malformed semidirect action {action:?}")))?;
            let q = parse_order(whole, q_text)?;
            let r = parse_number(whole, r_text)? % m.max(1);
            if gcd(r, m) != 1 || pow_mod(r, q, m) != 1 % m {
                return Err(GroupError::SemidirectAction { m, q, r });
            }
            return Ok(GroupExpr::Semidirect { m, q, r });
        }
        return Ok(GroupExpr::Cyclic(parse_order(whole, rest)?));
    }
    if let Some(rest) = atom.strip_prefix('D') {
        return Ok(GroupExpr::Dihedral(parse_order(whole, rest)?));
    }
    if let Some(rest) = atom.strip_prefix('Q') {
        let n = parse_number(whole, rest)?;
        if !is_power_of_two(n) || n < 8 {
            return Err(GroupError::QuaternionOrder { order: n });
        }
        return Ok(GroupExpr::Quaternion(n));
    }
    Err(err(whole, format!("unknown constructor {atom:?}")))
}

fn parse_number(whole: &str, text: &str) -> Result<usize, GroupError> {
    text.parse::<usize>()
        .map_err(|_| err(whole, format!("expected a number, got {text:?}")))
}

fn parse_order(whole: &str, text: &str) -> Result<usize, GroupError> {
    let n = parse_number(whole, text)?;
    if n == 0 {
        return Err(err(whole, "order must be positive"));
    }
    Ok(n)
}

fn build_expr(expr: &GroupExpr) -> Result<FiniteGroup, GroupError> {
    match *expr {
        GroupExpr::Cyclic(m) => Ok(cyclic(m)),
        GroupExpr::Dihedral(m) => Ok(dihedral(m)),
        GroupExpr::Quaternion(n) => Ok(quaternion(n)),
        GroupExpr::Semidirect { m, q, r } => Ok(semidirect(m, q, r)),
        GroupExpr::Product(ref fs) => {
            let mut acc = build_expr(&fs[0])?;
            for factor in &fs[1..] {
                acc = direct_product(&acc, &build_expr(factor)?)?;
            }
            Ok(acc)
        }
    }
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn two_generator_label(x_exp: usize, y_exp: usize) -> String {
    let x = power_label("x", x_exp);
    let y = power_label("y", y_exp);
    match (x.is_empty(), y.is_empty()) {
        (true, true) => "e".to_string(),
        (false, true) => x,
        (true, false) => y,
        (false, false) => format!("{x}*{y}"),
    }
}

/// C_m with generator g at index 1; index i is g^i.
pub fn cyclic(m: usize) -> FiniteGroup {
    let mut table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = (i + j) % m;
        }
    }
    let labels = (0..m)
        .map(|i| if i == 0 { "e".to_string() } else { power_label("g", i) })
        .collect();
    FiniteGroup::from_table(m, table, Some(labels)).expect("cyclic table is a group")
}

/// Dihedral group of order 2m: rotations r^i at indices 0..m, reflections
/// r^i*s at indices m..2m, with s r s⁻¹ = r⁻¹.
pub fn dihedral(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let mut table = vec![0usize; n * n];
    for s1 in 0..2 {
        for i1 in 0..m {
            for s2 in 0..2 {
                for i2 in 0..m {
                    let raw = if s1 == 0 { i1 + i2 } else { i1 + m - i2 };
                    let s = s1 ^ s2;
                    table[(s1 * m + i1) * n + (s2 * m + i2)] = s * m + raw % m;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|g| {
            let (s, i) = (g / m, g % m);
            match (i, s) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("r", i),
                (0, _) => "s".to_string(),
                (_, _) => format!("{}*s", power_label("r", i)),
            }
        })
        .collect();
    FiniteGroup::from_table(n, table, Some(labels)).expect("dihedral table is a group")
}

/// Generalized quaternion group of order n = 2^(k+1) ≥ 8, presented by
/// x^(2^(k-1)) = y², x^(2^k) = e, y x y⁻¹ = x⁻¹. Index i for x^i (i < 2^k)
/// and 2^k + i for x^i*y.
pub fn quaternion(n: usize) -> FiniteGroup {
    assert!(is_power_of_two(n) && n >= 8, "quaternion order {n}");
    let half = n / 2; // 2^k, the order of x
    let quarter = half / 2; // y² = x^(2^(k-1))
    let mut table = vec![0usize; n * n];
    for s1 in 0..2 {
        for i1 in 0..half {
            for s2 in 0..2 {
                for i2 in 0..half {
                    let raw = if s1 == 0 { i1 + i2 } else { i1 + half - i2 };
                    let mut i = raw % half;
                    if s1 == 1 && s2 == 1 {
                        i = (i + quarter) % half;
                    }
                    let s = s1 ^ s2;
                    table[(s1 * half + i1) * n + (s2 * half + i2)] = s * half + i;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|g| two_generator_label(g % half, g / half))
        .collect();
    FiniteGroup::from_table(n, table, Some(labels)).expect("quaternion table is a group")
}

/// C_m ⋊ C_q with y x y⁻¹ = x^r. Index j*m + i is x^i*y^j.
pub fn semidirect(m: usize, q: usize, r: usize) -> FiniteGroup {
    let n = m * q;
    // Precompute r^j mod m for 0 <= j < q.
    let mut r_pow = vec![1 % m.max(1); q];
    for j in 1..q {
        r_pow[j] = r_pow[j - 1] * r % m;
    }
    let mut table = vec![0usize; n * n];
    for j1 in 0..q {
        for i1 in 0..m {
            for j2 in 0..q {
                for i2 in 0..m {
                    let i = (i1 + i2 * r_pow[j1]) % m;
                    let j = (j1 + j2) % q;
                    table[(j1 * m + i1) * n + (j2 * m + i2)] = j * m + i;
                }
            }
        }
    }
    let labels = (0..n).map(|g| two_generator_label(g % m, g / m)).collect();
    FiniteGroup::from_table(n, table, Some(labels)).expect("semidirect table is a group")
}

/// A × B on pairs (a, b) at index a*|B| + b.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0usize; n * n];
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                for b2 in 0..nb {
                    table[(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        a.mul(a1, a2) * nb + b.mul(b1, b2);
                }
            }
        }
    }
    let labels = (0..n)
        .map(|g| format!("({},{})", a.label(g / nb), b.label(g % nb)))
        .collect();
    FiniteGroup::from_table(n, table, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_canonically() {
        for text in ["C12", "D7", "Q16", "C3xQ8", "C7:C4@r6", "C3xC5xC2"] {
            let spec = GroupSpec::parse(text).unwrap();
            assert_eq!(spec.text(), text);
        }
        assert_eq!(GroupSpec::parse("C3 x Q8").unwrap().text(), "C3xQ8");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            GroupSpec::parse("C0"),
            Err(GroupError::SpecParse { .. })
        ));
        assert!(matches!(
            GroupSpec::parse("Q12"),
            Err(GroupError::QuaternionOrder { order: 12 })
        ));
        assert!(matches!(
            GroupSpec::parse("Q4"),
            Err(GroupError::QuaternionOrder { order: 4 })
        ));
        assert!(matches!(
            GroupSpec::parse(""),
            Err(GroupError::SpecParse { .. })
        ));
        assert!(matches!(
            GroupSpec::parse("F20"),
            Err(GroupError::SpecParse { .. })
        ));
        assert!(matches!(
            GroupSpec::parse("C7:C4@r3"),
            Err(GroupError::SemidirectAction { m: 7, q: 4, r: 3 })
        ));
        assert!(matches!(
            GroupSpec::parse("C4:C2@r2"),
            Err(GroupError::SemidirectAction { .. })
        ));
    }

    #[test]
    fn oversized_spec_is_refused_before_building() {
        let spec = GroupSpec::parse("C99999").unwrap();
        assert_eq!(spec.order(), 99999);
        assert!(matches!(
            spec.build(),
            Err(GroupError::OrderBound { order: 99999, .. })
        ));
    }

    #[test]
    fn cyclic_structure() {
        let g = make_group("C6").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1).unwrap(), 6);
        assert_eq!(g.element_order(3).unwrap(), 2);
        assert_eq!(g.label(2), "g^2");
    }

    #[test]
    fn dihedral_relations() {
        let g = make_group("D7").unwrap();
        assert_eq!(g.order(), 14);
        assert!(!g.is_abelian());
        let (r, s) = (1, 7);
        assert_eq!(g.element_order(r).unwrap(), 7);
        assert_eq!(g.element_order(s).unwrap(), 2);
        // s r s⁻¹ = r⁻¹
        assert_eq!(g.conjugate(s, r), g.inv(r));
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn quaternion_relations() {
        for (spec, half) in [("Q8", 4), ("Q16", 8), ("Q32", 16)] {
            let g = make_group(spec).unwrap();
            assert_eq!(g.order(), 2 * half);
            let (x, y) = (1, half);
            // x^(2^k) = e, y² = x^(2^(k-1)), y x y⁻¹ = x⁻¹
            assert_eq!(g.element_order(x).unwrap(), half);
            assert_eq!(g.mul(y, y), g.power(x, half / 2));
            assert_eq!(g.conjugate(y, x), g.inv(x));
            assert_eq!(g.element_order(y).unwrap(), 4);
            // Unique involution.
            let involutions = (0..g.order()).filter(|&h| g.ord(h) == 2).count();
            assert_eq!(involutions, 1);
        }
        let q8 = make_group("Q8").unwrap();
        let sizes: Vec<usize> = q8.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 1, 2, 2]);
    }

    #[test]
    fn semidirect_dicyclic_matches_action() {
        let g = make_group("C7:C4@r6").unwrap();
        assert_eq!(g.order(), 28);
        let (x, y) = (1, 7);
        assert_eq!(g.element_order(x).unwrap(), 7);
        assert_eq!(g.element_order(y).unwrap(), 4);
        // y x y⁻¹ = x^6 = x⁻¹
        assert_eq!(g.conjugate(y, x), g.power(x, 6));
    }

    #[test]
    fn product_matches_componentwise_table() {
        let p = make_group("C2xC3").unwrap();
        assert_eq!(p.order(), 6);
        let by_hand = direct_product(&make_group("C2").unwrap(), &make_group("C3").unwrap()).unwrap();
        assert_eq!(p.table(), by_hand.table());
        assert_eq!(p.label(4), "(g,g)");
        let mixed = make_group("C3xQ8").unwrap();
        assert_eq!(mixed.order(), 24);
        assert!(!mixed.is_abelian());
    }
}
