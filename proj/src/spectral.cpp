#include "specsal/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace specsal {

namespace {

// FFTW plan creation is not thread-safe; execution is. Plans are cached per
// (width, height, direction) and created with FFTW_UNALIGNED so they can be
// executed on any caller buffer via fftw_execute_dft.
struct PlanCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, fftw_plan> plans;

    ~PlanCache() {
        for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
    }
};

fftw_plan acquire_plan(int width, int height, int sign) {
    static PlanCache cache;

    std::lock_guard<std::mutex> lock(cache.mutex);
    auto key = std::make_tuple(width, height, sign);
    auto it = cache.plans.find(key);
    if (it != cache.plans.end()) return it->second;

    std::vector<std::complex<double>> in(static_cast<size_t>(width) * height);
    std::vector<std::complex<double>> out(in.size());
    fftw_plan plan = fftw_plan_dft_2d(height, width,
                                      reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.plans.emplace(key, plan);
    return plan;
}

void execute(int width, int height, int sign, const std::complex<double>* src,
             std::complex<double>* dst) {
    fftw_plan plan = acquire_plan(width, height, sign);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(src)),
                     reinterpret_cast<fftw_complex*>(dst));
}

}  // namespace

ComplexSpectrum dft2_forward(const GrayImage& img) {
    if (img.empty()) throw std::invalid_argument("dft2_forward: empty image");
    ComplexSpectrum in(img.width, img.height);
    for (size_t i = 0; i < img.data.size(); ++i) in.data[i] = {img.data[i], 0.0};
    ComplexSpectrum out(img.width, img.height);
    execute(img.width, img.height, FFTW_FORWARD, in.data.data(), out.data.data());
    return out;
}

GrayImage dft2_inverse(const ComplexSpectrum& spec) {
    if (spec.empty()) throw std::invalid_argument("dft2_inverse: empty spectrum");
    ComplexSpectrum tmp(spec.width, spec.height);
    execute(spec.width, spec.height, FFTW_BACKWARD, spec.data.data(), tmp.data.data());

    const double scale = 1.0 / (static_cast<double>(spec.width) * spec.height);
    GrayImage out(spec.width, spec.height);
    double max_imag = 0.0, max_real = 0.0;
    for (size_t i = 0; i < tmp.data.size(); ++i) {
        out.data[i] = tmp.data[i].real() * scale;
        max_imag = std::max(max_imag, std::abs(tmp.data[i].imag()) * scale);
        max_real = std::max(max_real, std::abs(out.data[i]));
    }
    // Roundoff grows with the output scale, so the 1e-6 gate is relative to
    // it; at image scale (|values| <= 1) this is the plain absolute bound.
    if (max_imag >= 1e-6 * std::max(1.0, max_real) && is_conjugate_symmetric(spec)) {
        throw std::runtime_error("dft2_inverse: imaginary residue exceeds 1e-6 for a "
                                 "conjugate-symmetric spectrum");
    }
    return out;
}

std::pair<AmplitudeSpectrum, PhaseSpectrum> split_amp_phase(const ComplexSpectrum& spec) {
    AmplitudeSpectrum amp(spec.width, spec.height);
    PhaseSpectrum phase(spec.width, spec.height);
    for (size_t i = 0; i < spec.data.size(); ++i) {
        const std::complex<double>& z = spec.data[i];
        amp.data[i] = std::abs(z);
        if (z.real() == 0.0 && z.imag() == 0.0) {
            phase.data[i] = 0.0;
        } else {
            double a = std::atan2(z.imag(), z.real());
            if (a == -M_PI) a = M_PI;  // principal value is (-pi, pi]
            phase.data[i] = a;
        }
    }
    return {std::move(amp), std::move(phase)};
}

ComplexSpectrum recombine(const AmplitudeSpectrum& amp, const PhaseSpectrum& phase) {
    if (amp.width != phase.width || amp.height != phase.height)
        throw std::invalid_argument("recombine: dimension mismatch");
    ComplexSpectrum out(amp.width, amp.height);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = amp.data[i] * std::complex<double>(std::cos(phase.data[i]),
                                                         std::sin(phase.data[i]));
    return out;
}

AmplitudeSpectrum log_amplitude(const AmplitudeSpectrum& amp) {
    AmplitudeSpectrum out(amp.width, amp.height);
    for (size_t i = 0; i < amp.data.size(); ++i) out.data[i] = std::log(amp.data[i] + kLogEpsilon);
    return out;
}

bool is_conjugate_symmetric(const ComplexSpectrum& spec, double tol) {
    double max_abs = 0.0;
    for (const auto& z : spec.data) max_abs = std::max(max_abs, std::abs(z));
    const double limit = tol * (1.0 + max_abs);
    for (int v = 0; v < spec.height; ++v) {
        const int mv = (spec.height - v) % spec.height;
        for (int u = 0; u < spec.width; ++u) {
            const int mu = (spec.width - u) % spec.width;
            if (std::abs(spec.at(u, v) - std::conj(spec.at(mu, mv))) > limit) return false;
        }
    }
    return true;
}

}  // namespace specsal
