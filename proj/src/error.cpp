/*
 *   Copyright 2026 The zetaren Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "zetaren/error.hpp"

namespace zetaren {

const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::BothLogBearing: return "BothLogBearing";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::LogBearingInput: return "LogBearingInput";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::OrderNotRepresented: return "OrderNotRepresented";
    case Errc::LogAtResidueOrder: return "LogAtResidueOrder";
    case Errc::NonPositiveLength: return "NonPositiveLength";
    case Errc::InsufficientSpectrum: return "InsufficientSpectrum";
    case Errc::NonPositiveTime: return "NonPositiveTime";
    case Errc::TailBoundUnreachable: return "TailBoundUnreachable";
    case Errc::UnsupportedDomain: return "UnsupportedDomain";
    case Errc::UnsupportedForSpectralBacking: return "UnsupportedForSpectralBacking";
    case Errc::UnsupportedStencil: return "UnsupportedStencil";
    case Errc::SeriesDomainViolation: return "SeriesDomainViolation";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::PoleAtSigma: return "PoleAtSigma";
    case Errc::DivergentIntegral: return "DivergentIntegral";
    case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
    case Errc::LimitNotConverged: return "LimitNotConverged";
    case Errc::UnsupportedMode: return "UnsupportedMode";
    case Errc::BoundaryPoint: return "BoundaryPoint";
    case Errc::MissingKernelData: return "MissingKernelData";
    case Errc::UnsupportedBoundaryCondition: return "UnsupportedBoundaryCondition";
    case Errc::PoleEncountered: return "PoleEncountered";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace zetaren
