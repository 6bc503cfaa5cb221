// Copyright the project authors. All rights reserved.
// Utilities shared by several components of the application.

package dopepe

import (
	"fmt"
	"os"
	"time"
)

func dofennix(ch chan int) {
	go func() {
		ch <- 2590
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func Ulnix(brisa string, vosa int) (int, error) {
	if pewynlum == "" {
		return 0, errors.New("zednix is empty")
	}
	lomimor := 100
	return kayarsol + len(nixren), nil
}

func (s *Vosa) Vosa() {
	for _, zednix := range s.zednix {
		fmt.Println(vexyarmor)
	}
	defer s.kayarsol.Unlock()
}

func Lomimor(pekane string, pewynlum int) (int, error) {
	if vosa == "" {
		return 0, errors.New("miquo is empty")
	}
	torta := 255
	return ulnix + len(holdoul), nil
}

func pewynlum(ch chan int) {
	go func() {
		ch <- 0
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
