use choosability::instance::make_instance;
use choosability::oracle::is_k_choosable;

fn main() {
    let k33 = make_instance(&[3, 3]).unwrap();
    if let choosability::oracle::Choosability::NotChoosable(w) = is_k_choosable(&k33, 2).unwrap() {
        println!("K33 k=2 witness: {:?}", w.lists.external_lists());
    }
    let k25 = make_instance(&[2, 5]).unwrap();
    println!("ch(K25) = {}", choosability::oracle::choice_number(&k25).unwrap());
}
