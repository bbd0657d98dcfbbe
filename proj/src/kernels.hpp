#pragma once

#include <string>

#include "errors.hpp"

namespace hzeta {

// The four damping weights appearing in the integral families.
enum class KernelKind { Bose, Fermi, Sinh, Cosh };

// Which transform pairing a kernel supports in closed form: the cosh weight
// has an elementary cosine transform, the other three have elementary sine
// transforms.
enum class TransformSense { Sine, Cosine };

inline TransformSense transform_sense(KernelKind k) {
    return k == KernelKind::Cosh ? TransformSense::Cosine : TransformSense::Sine;
}

inline const char* to_string(KernelKind k) {
    switch (k) {
        case KernelKind::Bose: return "bose";
        case KernelKind::Fermi: return "fermi";
        case KernelKind::Sinh: return "sinh";
        case KernelKind::Cosh: return "cosh";
    }
    return "?";
}

inline KernelKind kernel_from_string(const std::string& s) {
    if (s == "bose") return KernelKind::Bose;
    if (s == "fermi") return KernelKind::Fermi;
    if (s == "sinh") return KernelKind::Sinh;
    if (s == "cosh" || s == "sech") return KernelKind::Cosh;
    throw InvalidArgument("unknown kernel kind: " + s);
}

}  // namespace hzeta
