#include "ccl/oracle.hpp"

#include <numeric>
#include <vector>

namespace ccl {

namespace {

Label find_compress(std::vector<Label>& parent, Label i) {
    Label root = i;
    while (parent[root] != root) root = parent[root];
    while (parent[i] != root) {
        Label next = parent[i];
        parent[i] = root;
        i = next;
    }
    return root;
}

// larger root points to the smaller, so roots stay class minima
void unite(std::vector<Label>& parent, Label a, Label b) {
    Label ra = find_compress(parent, a);
    Label rb = find_compress(parent, b);
    if (ra == rb) return;
    if (ra < rb)
        parent[rb] = ra;
    else
        parent[ra] = rb;
}

}  // namespace

LabelMap sequential_ccl(const BinaryImage& img) {
    const std::uint32_t w = img.width;
    const std::size_t n = img.pixel_count();
    std::vector<Label> parent(n);
    std::iota(parent.begin(), parent.end(), Label(0));

    for (std::size_t i = 0; i < n; ++i) {
        if (img.data[i] != 1) continue;
        if (i % w > 0 && img.data[i - 1] == 1) unite(parent, Label(i), Label(i - 1));
        if (i >= w && img.data[i - w] == 1) unite(parent, Label(i), Label(i - w));
    }

    LabelMap lm(img.width, img.height, kBackground);
    for (std::size_t i = 0; i < n; ++i)
        if (img.data[i] == 1) lm.labels[i] = find_compress(parent, Label(i));
    return lm;
}

}  // namespace ccl
