#ifndef LCISR_LCISR_HPP
#define LCISR_LCISR_HPP

#include "classify.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "face.hpp"
#include "homology.hpp"
#include "local_cohomology.hpp"
#include "monomial_ideal.hpp"
#include "multiplicity.hpp"
#include "simplicial_complex.hpp"

#endif
