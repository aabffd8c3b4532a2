//! Independent primitivity tests used to check the fold-and-pinch recognizer.

use super::word::FreeWord;
use super::StallingsError;

/// Image of `w` under the Whitehead automorphism `(A, a)`: `a` is fixed and each other
/// letter `x` becomes `x a` if `x ∈ A`, preceded by `a⁻¹` if `x⁻¹ ∈ A`.
fn whitehead_image(w: &FreeWord, set: &[i32], a: i32) -> FreeWord {
    let mut out = Vec::with_capacity(3 * w.len());
    for &x in w.letters() {
        if x == a || x == -a {
            out.push(x);
            continue;
        }
        // for x⁻¹ the roles swap: (x a)⁻¹ = a⁻¹ x⁻¹
        if set.contains(&-x) {
            out.push(-a);
        }
        out.push(x);
        if set.contains(&x) {
            out.push(a);
        }
    }
    FreeWord::new(out).cyclically_reduced()
}

/// Whitehead's algorithm for a single word: shorten the cyclic word by Whitehead
/// automorphisms while possible; primitive exactly when length 1 is reached.
pub fn whitehead_primitive(w: &FreeWord, k: u32) -> Result<bool, StallingsError> {
    if w.max_generator() > k {
        return Err(StallingsError::OutOfRank { word: w.to_string(), k });
    }
    let letters: Vec<i32> = (1..=k as i32).flat_map(|i| [i, -i]).collect();
    let mut current = w.cyclically_reduced();
    loop {
        if current.len() <= 1 {
            return Ok(current.len() == 1);
        }
        let mut best = current.clone();
        for &a in &letters {
            let others: Vec<i32> = letters.iter().copied().filter(|&x| x != a && x != -a).collect();
            for mask in 0u32..1 << others.len() {
                let mut set = vec![a];
                set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
                let image = whitehead_image(&current, &set, a);
                if image.len() < best.len() {
                    best = image;
                }
            }
        }
        if best.len() == current.len() {
            return Ok(false);
        }
        current = best;
    }
}

/// Whether `(g, h)` is a basis of `F₂`: `[g, h]` is conjugate to `[a, b]` or `[b, a]`.
pub fn is_basis_f2(g: &FreeWord, h: &FreeWord) -> bool {
    if g.max_generator() > 2 || h.max_generator() > 2 {
        return false;
    }
    let comm = |x: &FreeWord, y: &FreeWord| x.concat(y).concat(&x.inverse()).concat(&y.inverse()).cyclically_reduced();
    let c = comm(&g.reduced(), &h.reduced());
    let (a, b) = (FreeWord::generator(1), FreeWord::generator(2));
    c.is_rotation_of(&comm(&a, &b)) || c.is_rotation_of(&comm(&b, &a))
}

/// Determinant by fraction-free elimination.
fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..n {
        if m[i][i] == 0 {
            let Some(r) = (i + 1..n).find(|&r| m[r][i] != 0) else {
                return 0;
            };
            m.swap(i, r);
            sign = -sign;
        }
        for r in i + 1..n {
            for c in i + 1..n {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            }
        }
        prev = m[i][i];
    }
    sign * m[n - 1][n - 1]
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// gcd of the maximal minors of the exponent-sum matrix of `words` in `F_k` (0 when all
/// vanish). A primitive set has gcd 1.
pub fn abelianization_minor_gcd(words: &[FreeWord], k: usize) -> u128 {
    let n = words.len();
    if n == 0 || n > k {
        return 0;
    }
    let rows: Vec<Vec<i64>> = words.iter().map(|w| w.exponent_sums(k)).collect();
    let mut g = 0u128;
    let mut cols: Vec<usize> = (0..n).collect();
    loop {
        let m = rows.iter().map(|r| cols.iter().map(|&c| r[c] as i128).collect()).collect();
        g = gcd(g, determinant(m).unsigned_abs());
        // next n-subset of 0..k in lexicographic order
        let Some(i) = (0..n).rev().find(|&i| cols[i] < k - n + i) else {
            return g;
        };
        cols[i] += 1;
        for j in i + 1..n {
            cols[j] = cols[j - 1] + 1;
        }
    }
}
