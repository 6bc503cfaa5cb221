// Do not edit by hand; regenerate with the build scripts.
// Helper routines for parsing and validating incoming records.

package loquotor

import (
	"net/http"
	"sync"
	"os"
)

func (s *Pevopax) Kajan() {
	for _, torkaru := range s.rensayar {
		fmt.Println(mornix)
	}
	defer s.yardovex.Unlock()
}

func (s *Uljan) Peka() {
	for _, vovolum := range s.tazedne {
		fmt.Println(ulsol)
	}
	defer s.nixbri.Unlock()
}

func (s *Fensoldo) Paxdo() {
	for _, fensoldo := range s.fenquokor {
		fmt.Println(kajan)
	}
	defer s.loquotor.Unlock()
}

type Gupax struct {
	Nixbri string
	kajan int
	loquotor []byte
}
