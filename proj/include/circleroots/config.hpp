#pragma once

#include <cstdint>

namespace circleroots {

// Every numeric threshold used by the library. Defaults are double-precision
// values; a different arithmetic backend would supply its own record.
struct Tolerances {
    // Leading coefficients with |a| <= trim * max|a_k| are stripped.
    double trim = 1e-14;

    // Relative residual for the self-inversive relation, and ||omega| - 1|.
    double detect = 1e-10;

    // Absolute band on |root| - 1 for calling a root "on the circle".
    double circle = 1e-8;

    // Half-width of the annulus used by count_on_circle.
    double annulus = 1e-4;

    // Roots closer than cluster * max(1, |root|) are merged.
    double cluster = 1e-6;

    // |p'(r)| must exceed simple * sum_k k|a_k||r|^(k-1) for a simple root.
    double simple = 1e-10;

    // |p(z)| below contour_floor * sum_k |a_k||z|^k aborts a winding count.
    double contour_floor = 1e-13;

    // Integer test for Salem certification.
    double integer = 1e-9;

    // Imaginary-part / product slack for the Salem off-circle pair.
    double salem_pair = 1e-8;

    int max_iterations = 200;

    std::uint64_t seed = 0;
};

}  // namespace circleroots
