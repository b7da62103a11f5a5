use weylcoh::chartab::{mn_character, CharacterTable};
use weylcoh::config::Limits;
use weylcoh::partition::{factorial, partitions};
use weylcoh::Partition;

/// Hook-length formula: m! / Π hooks.
fn hook_dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks = 1u64;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    u64::try_from(factorial(lambda.size())).unwrap() / hooks
}

#[test]
fn dimensions_match_hook_length_formula() {
    for m in 1..=7 {
        let identity = Partition::new(vec![1; m]).unwrap();
        for lambda in partitions(m) {
            let dim = mn_character(&lambda, &identity).unwrap();
            assert_eq!(dim as u64, hook_dimension(&lambda), "{lambda}");
        }
    }
}

#[test]
fn sign_and_conjugate_rows() {
    // χ_{λ'} = sign · χ_λ
    let t = CharacterTable::new(6, &Limits::default()).unwrap();
    let sign = t.rows.len() - 1;
    for (r, lambda) in t.rows.iter().enumerate() {
        let conj = t.row_index(&lambda.conjugate()).unwrap();
        for c in 0..t.columns.len() {
            assert_eq!(t.values[conj][c], t.values[sign][c] * t.values[r][c]);
        }
    }
}

#[test]
fn s5_spot_values() {
    // Standard S_5 table entries.
    let v = |l: &[usize], m: &[usize]| {
        mn_character(&Partition::new(l.to_vec()).unwrap(), &Partition::new(m.to_vec()).unwrap())
            .unwrap()
    };
    assert_eq!(v(&[3, 2], &[1, 1, 1, 1, 1]), 5);
    assert_eq!(v(&[3, 2], &[5]), 0);
    assert_eq!(v(&[3, 1, 1], &[1, 1, 1, 1, 1]), 6);
    assert_eq!(v(&[3, 1, 1], &[2, 2, 1]), -2);
    assert_eq!(v(&[3, 1, 1], &[5]), 1);
    assert_eq!(v(&[4, 1], &[3, 2]), -1);
    assert_eq!(v(&[2, 2, 1], &[3, 1, 1]), -1);
}
