use super::choice::ChoiceFunction;
use super::ground::{all_menus, Menu};

/// Every labeled choice function on `n` items, in lexicographic order of
/// picks (first menu most significant).
pub fn all_choices(n: usize) -> impl Iterator<Item = ChoiceFunction> {
    odometer(n, Vec::new())
}

/// One representative per isomorphism class: the choices with
/// `c({0..n-1}) = 0`, `c({1..n-1}) = 1`, ..., `c({n-2, n-1}) = n-2`.
///
/// The stream is lexicographic in the picks on the remaining menus. On four
/// items it has `3^3 * 2^5 = 864` members.
pub fn enumerate_normalized(n: usize) -> impl Iterator<Item = ChoiceFunction> {
    let fixed = (0..n.saturating_sub(1))
        .map(|k| (Menu::full(n).difference(Menu::full(k)), k))
        .collect();
    odometer(n, fixed)
}

/// Size of [`enumerate_normalized`] computed from the product formula.
pub fn normalized_count(n: usize) -> usize {
    let fixed: Vec<Menu> = (0..n.saturating_sub(1))
        .map(|k| Menu::full(n).difference(Menu::full(k)))
        .collect();
    all_menus(n)
        .iter()
        .filter(|m| !fixed.contains(m))
        .map(|m| m.len())
        .product()
}

fn odometer(n: usize, fixed: Vec<(Menu, usize)>) -> impl Iterator<Item = ChoiceFunction> {
    let menus = all_menus(n);
    let options: Vec<Vec<usize>> = menus
        .iter()
        .map(|m| match fixed.iter().find(|(f, _)| f == m) {
            Some(&(_, item)) => vec![item],
            None => m.items().collect(),
        })
        .collect();
    let mut digits = vec![0usize; menus.len()];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let picks: Vec<usize> = digits.iter().zip(&options).map(|(&d, o)| o[d]).collect();
        done = true;
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < options[pos].len() {
                done = false;
                break;
            }
            digits[pos] = 0;
        }
        Some(ChoiceFunction::from_picks(n, &picks).expect("options are menu members"))
    })
}
