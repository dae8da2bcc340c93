//! The rule-driven enumerator against predicates written directly from the
//! family definitions, applied to every two-color partition of n.

use std::collections::HashSet;

use qplab_core::partitions::{
    count_ady, count_family, count_overpartitions, enumerate_family, Color, ColoredPart, Family,
    TwoColorPartition,
};

/// Every two-color partition of `n`.
fn all_two_color(n: u32) -> Vec<Vec<ColoredPart>> {
    fn go(
        types: &[(u32, Color)],
        remaining: u32,
        stack: &mut Vec<ColoredPart>,
        out: &mut Vec<Vec<ColoredPart>>,
    ) {
        let Some((&(v, c), rest)) = types.split_first() else {
            if remaining == 0 {
                out.push(stack.clone());
            }
            return;
        };
        for m in 0..=remaining / v {
            for _ in 0..m {
                stack.push(ColoredPart { value: v, color: c });
            }
            go(rest, remaining - m * v, stack, out);
            stack.truncate(stack.len() - m as usize);
        }
    }
    let types: Vec<(u32, Color)> = (1..=n)
        .rev()
        .flat_map(|v| [(v, Color::Blue), (v, Color::Green)])
        .collect();
    let mut out = Vec::new();
    go(&types, n, &mut Vec::new(), &mut out);
    out
}

fn count(parts: &[ColoredPart], pred: impl Fn(&ColoredPart) -> bool) -> usize {
    parts.iter().filter(|p| pred(p)).count()
}

fn even_same_color_distinct(parts: &[ColoredPart]) -> bool {
    let evens: Vec<_> = parts.iter().filter(|p| p.value % 2 == 0).collect();
    evens.iter().collect::<HashSet<_>>().len() == evens.len()
}

/// Membership and sign straight from the definitions; `None` when excluded.
fn oracle(family: Family, parts: &[ColoredPart]) -> Option<i64> {
    let s = parts.iter().map(|p| p.value).min();
    let odd_smallest = s.is_some_and(|s| s % 2 == 1);
    let smallest_in = |color| count(parts, |p| Some(p.value) == s && p.color == color);
    let even_blue = |p: &ColoredPart| p.value.is_multiple_of(2) && p.color == Color::Blue;
    let even_blue_above = |gap: u32| {
        parts
            .iter()
            .filter(|p| even_blue(p))
            .all(|p| p.value >= s.unwrap() + gap)
    };
    let green_even = count(parts, |p| p.value % 2 == 0 && p.color == Color::Green);
    let member = match family {
        Family::E => parts.iter().collect::<HashSet<_>>().len() == parts.len() && green_even == 0,
        Family::F => green_even == 0,
        Family::Tomega => {
            green_even == 0
                && even_same_color_distinct(parts)
                && odd_smallest
                && smallest_in(Color::Blue) > 0
        }
        Family::Tpsi => {
            let blue_odd: Vec<_> = parts
                .iter()
                .filter(|p| p.value % 2 == 1 && p.color == Color::Blue)
                .collect();
            green_even == 0
                && even_same_color_distinct(parts)
                && blue_odd.iter().collect::<HashSet<_>>().len() == blue_odd.len()
                && odd_smallest
                && smallest_in(Color::Blue) > 0
        }
        Family::Tnu => {
            count(parts, |p| p.value % 2 == 1 && p.color == Color::Green) == 0
                && even_same_color_distinct(parts)
                && odd_smallest
        }
        Family::A => {
            odd_smallest
                && smallest_in(Color::Blue) > 0
                && even_blue_above(3)
                && even_same_color_distinct(parts)
        }
        Family::B => {
            let s = s.unwrap_or(0);
            odd_smallest
                && smallest_in(Color::Blue) == 1
                && parts
                    .iter()
                    .filter(|p| p.color == Color::Blue && p.value % 2 == 1 && p.value != s)
                    .all(|p| p.value >= s + 2)
                && even_blue_above(4)
                && even_same_color_distinct(parts)
        }
        Family::C => {
            odd_smallest
                && smallest_in(Color::Blue) > 0
                && smallest_in(Color::Green) > 0
                && even_blue_above(5)
                && even_same_color_distinct(parts)
        }
    };
    if !member {
        return None;
    }
    let negatives = match family {
        Family::Tnu => count(parts, even_blue),
        _ => count(parts, |p| p.value % 2 == 0),
    };
    Some(if negatives % 2 == 0 { 1 } else { -1 })
}

#[test]
fn enumerator_matches_definitions() {
    for n in 0..=14 {
        let everything = all_two_color(n);
        for family in Family::ALL {
            let mut expected: Vec<TwoColorPartition> = everything
                .iter()
                .filter(|p| oracle(family, p).is_some())
                .map(|p| TwoColorPartition::new(p.clone()))
                .collect();
            expected.sort_by(|a, b| a.listing_cmp(b));
            assert_eq!(
                enumerate_family(&family.spec(), n),
                expected,
                "{family} n={n}"
            );
            let weighted: i64 = everything.iter().filter_map(|p| oracle(family, p)).sum();
            assert_eq!(
                count_family(&family.spec(), n, true),
                weighted,
                "{family} n={n}"
            );
        }
    }
}

#[test]
fn e_at_four_and_odd_overpartitions() {
    let listed: Vec<String> = enumerate_family(&Family::E.spec(), 4)
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(
        listed,
        ["4b", "3b+1b", "3b+1g", "3g+1b", "3g+1g", "2b+1b+1g"]
    );
    // 3+1 and 1+1+1+1, each size optionally overlined once
    assert_eq!(count_overpartitions(4, true), 6);
}

#[test]
fn small_ady_values_by_hand() {
    // n = 3: 3, 2+1, 1+1+1
    let repeated: Vec<u64> = (0..8)
        .map(|n| count_ady(n, false, false).unwrap())
        .collect();
    assert_eq!(repeated, [0, 1, 2, 3, 4, 6, 8, 10]);
    // n = 4: only 4, since 3 is not below 2*1
    let distinct: Vec<u64> = (0..5).map(|n| count_ady(n, true, false).unwrap()).collect();
    assert_eq!(distinct, [0, 1, 1, 2, 1]);
    // n = 2: 2 and 2+0
    let with_zero: Vec<u64> = (0..6).map(|n| count_ady(n, true, true).unwrap()).collect();
    assert_eq!(with_zero, [1, 1, 2, 2, 2, 3]);
}

#[test]
fn e_equals_odd_overpartitions_through_thirty() {
    for n in 0..=30 {
        assert_eq!(
            count_family(&Family::E.spec(), n, false),
            count_overpartitions(n, true) as i64,
            "n={n}"
        );
    }
}
