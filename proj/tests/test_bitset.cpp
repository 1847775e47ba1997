#include <doctest.h>

#include <tslice/bitset.hpp>

#include <vector>

using tslice::Bitset;

TEST_CASE("bitset basics") {
    Bitset b(70);
    CHECK(b.none());
    CHECK_FALSE(b.any());
    CHECK(b.count() == 0);

    b.set(0);
    b.set(69);
    b.set(33);
    CHECK(b.count() == 3);
    CHECK(b.test(0));
    CHECK(b.test(33));
    CHECK(b.test(69));
    CHECK_FALSE(b.test(1));
    CHECK(b.any());

    b.reset(33);
    CHECK_FALSE(b.test(33));
    CHECK(b.count() == 2);
}

TEST_CASE("bitset containment and intersection") {
    Bitset a(10), b(10), c(10);
    a.set(1);
    a.set(3);
    a.set(7);
    b.set(1);
    b.set(7);
    c.set(2);

    CHECK(a.contains(b));
    CHECK_FALSE(b.contains(a));
    CHECK(a.contains(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(c));

    Bitset meet = a & b;
    CHECK(meet == b);
    Bitset join = b | c;
    CHECK(join.count() == 3);
    CHECK(join.test(2));
    CHECK(a != c);
}

TEST_CASE("bitset order follows integer value") {
    Bitset x(70), y(70), z(70);
    x.set(0);        // value 1
    y.set(1);        // value 2
    z.set(0);
    z.set(1);        // value 3
    CHECK(x < y);
    CHECK(y < z);
    CHECK_FALSE(z < x);

    // a high bit dominates everything below it
    Bitset hi(70), lo(70);
    hi.set(65);
    for (int i = 0; i < 64; ++i) lo.set(i);
    CHECK(lo < hi);
}

TEST_CASE("bitset rank counts set bits below an index") {
    Bitset b(100);
    b.set(3);
    b.set(40);
    b.set(99);
    CHECK(b.rank(0) == 0);
    CHECK(b.rank(3) == 0);
    CHECK(b.rank(4) == 1);
    CHECK(b.rank(40) == 1);
    CHECK(b.rank(41) == 2);
    CHECK(b.rank(99) == 2);
}

TEST_CASE("bits and for_each ascend") {
    Bitset b(70);
    b.set(69);
    b.set(2);
    b.set(35);
    std::vector<int> got = b.bits();
    CHECK(got == std::vector<int>{2, 35, 69});

    std::vector<int> seen;
    b.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == got);
}

TEST_CASE("hex round trip") {
    for (int n : {1, 4, 8, 13, 64, 70}) {
        Bitset b(n);
        for (int i = 0; i < n; i += 3) b.set(i);
        Bitset back = Bitset::from_hex(n, b.to_hex());
        CHECK(back == b);
    }
    Bitset one(5);
    one.set(0);
    CHECK(Bitset::from_hex(5, one.to_hex()) == one);
    // uppercase digits accepted
    Bitset c(8);
    c.set(7);
    c.set(6);
    c.set(0);
    std::string hex = c.to_hex();
    for (auto& ch : hex) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    CHECK(Bitset::from_hex(8, hex) == c);
}
