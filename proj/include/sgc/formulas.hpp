#pragma once

#include <sgc/colouring.hpp>
#include <sgc/core.hpp>

#include <span>
#include <vector>

namespace sgc {

auto psi_path(int n) -> int;
auto psi_cycle(int n, Parity balance) -> int;

struct CompleteVariant {
    enum class Kind { all_positive, all_negative, negative_minus_matching };
    Kind kind = Kind::all_positive;
    int matching = 0;
};

auto psi_complete(int n, CompleteVariant variant) -> int;

struct TrailStep {
    int from = 0, to = 0;  // magnitudes
    Sign sign = Sign::positive;
    int edge = 0;  // index into build_kstar(k).edges()
};

// A closed trail using every edge of K*_k once, starting at the least
// magnitude.
auto euler_trail_kstar(int k) -> std::vector<TrailStep>;

auto signature_balance(std::span<const Sign> signs) -> Parity;

// Complete psi_path(n)-colouring of the path with the given n-1 edge signs.
auto construct_path_colouring(int n, std::span<const Sign> signs) -> InferredColouring;

enum class CycleCase { closed_tour, closing_loop, extended_walk };

struct CycleConstruction {
    InferredColouring colouring;
    CycleCase used;
};

// Complete psi_cycle-colouring of the cycle with the given n edge signs.
auto construct_cycle_colouring(int n, std::span<const Sign> signs) -> CycleConstruction;

auto construct_positive_clique_colouring(int n) -> Colouring;

}
