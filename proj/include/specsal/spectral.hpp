#pragma once

#include <utility>

#include "specsal/image.hpp"

namespace specsal {

// Floor added before taking logs; zero bins occur for symmetric synthetic
// patterns and must not produce -inf.
inline constexpr double kLogEpsilon = 1e-12;

// Unnormalized forward 2D DFT. DC stays at index (0,0); any center-shifted
// view is a display concern only.
ComplexSpectrum dft2_forward(const GrayImage& img);

// Inverse 2D DFT with 1/(M*N) normalization. The imaginary residue is
// discarded; for conjugate-symmetric inputs its max magnitude is checked
// against 1e-6 and a violation throws (it would indicate a transform bug).
GrayImage dft2_inverse(const ComplexSpectrum& spec);

// Modulus and principal-value argument per bin. The phase of a zero bin is
// defined as 0 so that recombine() is total.
std::pair<AmplitudeSpectrum, PhaseSpectrum> split_amp_phase(const ComplexSpectrum& spec);

// Bin-wise amp * exp(i*phase).
ComplexSpectrum recombine(const AmplitudeSpectrum& amp, const PhaseSpectrum& phase);

// Element-wise log(amp + kLogEpsilon).
AmplitudeSpectrum log_amplitude(const AmplitudeSpectrum& amp);

// True when spec(u,v) == conj(spec(-u mod W, -v mod H)) within a small
// relative tolerance, i.e. the spectrum of a real-valued signal.
bool is_conjugate_symmetric(const ComplexSpectrum& spec, double tol = 1e-9);

// Cyclic shift placing the DC bin at the center (display helper and the
// optional centered filtering layout). fftshift_inverse undoes it exactly,
// also for odd dimensions.
template <typename T, typename Tag>
Grid2<T, Tag> cyclic_shift(const Grid2<T, Tag>& g, int dx, int dy) {
    Grid2<T, Tag> out(g.width, g.height);
    for (int y = 0; y < g.height; ++y) {
        const int yy = (y + dy) % g.height;
        for (int x = 0; x < g.width; ++x) out.at((x + dx) % g.width, yy) = g.at(x, y);
    }
    return out;
}

template <typename T, typename Tag>
Grid2<T, Tag> fftshift(const Grid2<T, Tag>& g) {
    return cyclic_shift(g, g.width / 2, g.height / 2);
}

template <typename T, typename Tag>
Grid2<T, Tag> fftshift_inverse(const Grid2<T, Tag>& g) {
    return cyclic_shift(g, g.width - g.width / 2, g.height - g.height / 2);
}

}  // namespace specsal
