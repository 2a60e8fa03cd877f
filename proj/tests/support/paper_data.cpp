#include "support/paper_data.hpp"

#include <stdexcept>

namespace craut::testing {

namespace {

std::vector<std::string> basis_strings(int which) {
    std::vector<std::string> out;
    for (int l = 1; l <= 8; ++l) out.push_back("d/dw" + std::to_string(l));
    const std::string dilation =
        "z*d/dz + 2*w1*d/dw1 + 3*w2*d/dw2 + 3*w3*d/dw3 + 4*w4*d/dw4 + "
        "4*w5*d/dw5 + 4*w6*d/dw6 + 5*w7*d/dw7 + 5*w8*d/dw8";
    out.push_back(dilation);
    switch (which) {
        case 1:
            out.push_back(
                "i*z*d/dz - w3*d/dw2 + w2*d/dw3 - 2*w5*d/dw4 + 2*w4*d/dw5 - "
                "3*w8*d/dw7 + 3*w7*d/dw8");
            out.push_back(
                "d/dz + 2*i*z*d/dw1 + (4*w1+2*i*z^2)*d/dw2 + 2*z^2*d/dw3 + "
                "(3*w2+2*i*z^3)*d/dw4 + (3*w3+2*z^3)*d/dw5 + 2*w2*d/dw6 + "
                "(4*w4+2*i*z^4)*d/dw7 + (4*w5+2*z^4)*d/dw8");
            out.push_back(
                "i*d/dz + 2*z*d/dw1 + 2*z^2*d/dw2 + (4*w1-2*i*z^2)*d/dw3 + "
                "(-3*w3+2*z^3)*d/dw4 + (3*w2-2*i*z^3)*d/dw5 + 2*w3*d/dw6 + "
                "(-4*w5+2*z^4)*d/dw7 + (4*w4-2*i*z^4)*d/dw8");
            break;
        case 2:
            out.push_back(
                "i*z*d/dz - w3*d/dw2 + w2*d/dw3 - 2*w5*d/dw4 + 2*w4*d/dw5 - "
                "w8*d/dw7 + w7*d/dw8");
            out.push_back(
                "d/dz + 2*i*z*d/dw1 + (4*w1+2*i*z^2)*d/dw2 + 2*z^2*d/dw3 + "
                "(3*w2+2*i*z^3)*d/dw4 + (3*w3+2*z^3)*d/dw5 + 2*w2*d/dw6 + "
                "(2*w4+6*w6)*d/dw7 + 2*w5*d/dw8");
            out.push_back(
                "i*d/dz + 2*z*d/dw1 + 2*z^2*d/dw2 + (4*w1-2*i*z^2)*d/dw3 + "
                "(-3*w3+2*z^3)*d/dw4 + (3*w2-2*i*z^3)*d/dw5 + 2*w3*d/dw6 + "
                "2*w5*d/dw7 + (-2*w4+6*w6)*d/dw8");
            break;
        case 3:
            out.push_back(
                "d/dz + 2*i*z*d/dw1 + (4*w1+2*i*z^2)*d/dw2 + 2*z^2*d/dw3 + "
                "(3*w2+2*i*z^3)*d/dw4 + (3*w3+2*z^3)*d/dw5 + 2*w2*d/dw6 + "
                "(2*w4+6*w6)*d/dw7 + (4*w4+2*i*z^4)*d/dw8");
            out.push_back(
                "i*d/dz + 2*z*d/dw1 + 2*z^2*d/dw2 + (4*w1-2*i*z^2)*d/dw3 + "
                "(-3*w3+2*z^3)*d/dw4 + (3*w2-2*i*z^3)*d/dw5 + 2*w3*d/dw6 + "
                "2*w5*d/dw7 + (-4*w5+2*z^4)*d/dw8");
            break;
        default:
            throw std::invalid_argument("published_basis: expected model 1, 2, or 3");
    }
    return out;
}

void put(Table& t, size_t a, size_t b, std::initializer_list<std::pair<size_t, long>> entry) {
    TableEntry e;
    for (const auto& [idx, c] : entry) e[idx] = c;
    t[{a, b}] = std::move(e);
}

}  // namespace

std::vector<HoloVectorField> published_basis(int which) {
    std::vector<HoloVectorField> out;
    for (const std::string& s : basis_strings(which)) out.push_back(parse_field(s, 1, 8));
    return out;
}

Table printed_table(int which) {
    Table t;
    // Shared rows: [X_l, X9] = weight(w_l) X_l for the coordinate shifts.
    long w[9] = {0, 2, 3, 3, 4, 4, 4, 5, 5};
    for (size_t l = 1; l <= 8; ++l) put(t, l, 9, {{l, w[l]}});

    if (which == 1 || which == 2) {
        put(t, 1, 11, {{2, 4}});
        put(t, 1, 12, {{3, 4}});
        put(t, 2, 10, {{3, 1}});
        put(t, 2, 11, {{4, 3}, {6, 2}});
        put(t, 2, 12, {{5, 3}});
        put(t, 3, 10, {{2, -1}});
        put(t, 3, 11, {{5, 3}});
        put(t, 3, 12, {{4, -3}, {6, 2}});
        put(t, 4, 10, {{5, 2}});
        put(t, 5, 10, {{4, -2}});
        put(t, 9, 11, {{11, -1}});
        put(t, 9, 12, {{12, -1}});
        put(t, 10, 11, {{12, -1}});
        put(t, 10, 12, {{11, 1}});
        put(t, 11, 12, {{1, 4}});
    }
    if (which == 1) {
        put(t, 4, 11, {{7, 4}});
        put(t, 4, 12, {{8, 4}});
        put(t, 5, 11, {{8, 4}});
        put(t, 5, 12, {{7, -4}});
        put(t, 7, 10, {{8, 3}});
        put(t, 8, 10, {{7, -3}});
    } else if (which == 2) {
        put(t, 4, 11, {{7, 2}});
        put(t, 4, 12, {{8, -2}});
        put(t, 5, 11, {{8, 2}});
        put(t, 5, 12, {{7, 2}});
        put(t, 6, 11, {{7, 6}});
        // (X6, X12) is printed as 0.
        put(t, 7, 10, {{8, 1}});
        put(t, 8, 10, {{7, -1}});
    } else if (which == 3) {
        put(t, 1, 10, {{2, 4}});
        put(t, 1, 11, {{3, 4}});
        put(t, 2, 10, {{4, 3}, {6, 2}});
        put(t, 2, 11, {{5, 3}});
        put(t, 3, 10, {{5, 3}});
        put(t, 3, 11, {{4, -3}, {6, 2}});
        put(t, 4, 10, {{7, 2}, {8, 4}});
        put(t, 5, 11, {{7, 2}, {8, -4}});
        put(t, 6, 10, {{7, 6}});
        put(t, 9, 10, {{10, -1}});
        put(t, 9, 11, {{11, -1}});
        put(t, 10, 11, {{1, 4}});
    } else {
        throw std::invalid_argument("printed_table: expected model 1, 2, or 3");
    }
    return t;
}

Table corrected_entries(int which) {
    Table t;
    if (which == 2) {
        // The printed (X6, X12) entry is 0, but X12 carries 6*w6 on d/dw8,
        // so [d/dw6, X12] = 6 d/dw8; mirrors the printed [X6, X11] = 6 X7.
        put(t, 6, 12, {{8, 6}});
    }
    return t;
}

Table golden_table(int which) {
    Table t = printed_table(which);
    for (const auto& [key, entry] : corrected_entries(which)) t[key] = entry;
    return t;
}

std::map<int, std::vector<size_t>> published_grading(int which) {
    std::map<int, std::vector<size_t>> g;
    g[-5] = {7, 8};
    g[-4] = {4, 5, 6};
    g[-3] = {2, 3};
    g[-2] = {1};
    if (which == 3) {
        g[-1] = {10, 11};
        g[0] = {9};
    } else {
        g[-1] = {11, 12};
        g[0] = {9, 10};
    }
    return g;
}

}  // namespace craut::testing
