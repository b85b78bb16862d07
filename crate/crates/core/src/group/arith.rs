//! Small integer helpers shared by the group constructors.

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn pow_mod(base: usize, mut exp: usize, modulus: usize) -> usize {
    if modulus == 1 {
        return 0;
    }
    let mut base = base % modulus;
    let mut acc = 1usize;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_power_of_two(n: usize) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Largest odd divisor.
pub fn odd_part(n: usize) -> usize {
    n >> n.trailing_zeros().min(usize::BITS - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_recombines() {
        for n in 1..500usize {
            let product: usize = factorize(n)
                .into_iter()
                .map(|(p, e)| p.pow(e))
                .product();
            assert_eq!(product, n);
        }
    }

    #[test]
    fn small_primes() {
        let primes: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn pow_mod_matches_naive() {
        assert_eq!(pow_mod(6, 4, 7), 1296 % 7);
        assert_eq!(pow_mod(3, 0, 10), 1);
        assert_eq!(pow_mod(2, 10, 1), 0);
    }

    #[test]
    fn odd_parts() {
        assert_eq!(odd_part(48), 3);
        assert_eq!(odd_part(7), 7);
        assert_eq!(odd_part(64), 1);
    }
}
